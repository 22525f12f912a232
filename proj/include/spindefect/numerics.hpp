#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace spindefect {

/// Bessel function of the first kind J_n(x) for integer order.
///
/// Miller's downward recurrence started well above max(n, x), normalized with
/// J_0 + 2 sum_k J_2k = 1. Negative orders and arguments follow
/// J_{-n} = (-1)^n J_n and J_n(-x) = (-1)^n J_n(x).
double bessel_j(int n, double x);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(int order);

/// Quadrature over theta in [-pi, pi]; weights sum to 2 pi.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// Composite Gauss-Legendre rule with `node_count` nodes in total. Panel
/// boundaries always include -pi, 0 and pi, so integrands that are analytic
/// on each half-interval but only continuous at theta = 0 (anything built from
/// |theta| or |sin theta|) converge spectrally.
QuadratureRule theta_rule(int node_count);

/// Node count resolving an integrand oscillating at rate ~ tau + d:
/// max(64, ceil(12 (tau + d))), rounded up to even.
int node_count_for(double tau, long distance);

/// (1 / 2 pi) sum_i w_i f(theta_i). Throws NumericalError naming theta if the
/// integrand is not finite at a node.
std::complex<double> integrate_theta(
    const std::function<std::complex<double>(double)>& integrand,
    const QuadratureRule& rule);

}  // namespace spindefect
