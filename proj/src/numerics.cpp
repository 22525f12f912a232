#include "spindefect/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "spindefect/errors.hpp"

namespace spindefect {

namespace {

constexpr double kRescaleAbove = 1e250;

// Power series; for x <= 1 the terms shrink by at least 4x per step.
double bessel_j_series(int n, double x) {
  const double q = 0.25 * x * x;
  double term = std::exp(n * std::log(0.5 * x) - std::lgamma(n + 1.0));
  double sum = term;
  for (int k = 1; k < 60 && term != 0.0; ++k) {
    term *= -q / (k * static_cast<double>(k + n));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double bessel_j_nonneg(int n, double x) {
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;
  if (x <= 1.0) return bessel_j_series(n, x);

  // Start far enough above both n and x that the seed error has decayed
  // below double precision by the time the recurrence reaches order n.
  const double top = std::max(static_cast<double>(n), x);
  int start = static_cast<int>(top + 30.0 + std::sqrt(160.0 * top));
  start += start % 2;

  double next = 0.0;  // J_{k+1}
  double cur = 1e-300;  // J_k, arbitrary seed
  double at_n = (start == n) ? cur : 0.0;
  double norm = 0.0;  // accumulates J_0 + 2 sum J_2k, k >= 1
  for (int k = start; k > 0; --k) {
    const double prev = 2.0 * k / x * cur - next;  // J_{k-1}
    next = cur;
    cur = prev;
    if (k - 1 == n) at_n = cur;
    if ((k - 1) % 2 == 0) norm += (k - 1 == 0) ? cur : 2.0 * cur;
    if (std::abs(cur) > kRescaleAbove) {
      cur /= kRescaleAbove;
      next /= kRescaleAbove;
      at_n /= kRescaleAbove;
      norm /= kRescaleAbove;
    }
  }
  return at_n / norm;
}

}  // namespace

double bessel_j(int n, double x) {
  double sign = 1.0;
  if (n < 0) {
    n = -n;
    if (n % 2) sign = -sign;
  }
  if (x < 0.0) {
    x = -x;
    if (n % 2) sign = -sign;
  }
  return sign * bessel_j_nonneg(n, x);
}

GaussLegendre gauss_legendre(int order) {
  if (order < 1) throw ParameterError("Gauss-Legendre order must be >= 1");
  GaussLegendre rule{std::vector<double>(order), std::vector<double>(order)};
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 1; j <= order; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = order * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    // Recompute the derivative at the converged root for the weight.
    double p0 = 1.0;
    double p1 = 0.0;
    for (int j = 1; j <= order; ++j) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
    }
    dp = order * (z * p0 - p1) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[order - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  if (order % 2) rule.nodes[order / 2] = 0.0;
  return rule;
}

QuadratureRule theta_rule(int node_count) {
  if (node_count < 16 || node_count % 2) {
    std::ostringstream msg;
    msg << "theta rule needs an even node count >= 16 (got " << node_count
        << ")";
    throw ParameterError(msg.str());
  }
  constexpr int kPanelOrder = 16;
  const int per_half = node_count / 2;
  const int panels = (per_half + kPanelOrder - 1) / kPanelOrder;
  const int base = per_half / panels;
  const int extra = per_half % panels;
  const double width = std::numbers::pi / panels;

  QuadratureRule rule;
  rule.nodes.reserve(node_count);
  rule.weights.reserve(node_count);
  for (int half = 0; half < 2; ++half) {
    const double origin = half == 0 ? -std::numbers::pi : 0.0;
    for (int p = 0; p < panels; ++p) {
      const GaussLegendre gl = gauss_legendre(base + (p < extra ? 1 : 0));
      const double lo = origin + p * width;
      for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        rule.nodes.push_back(lo + 0.5 * width * (gl.nodes[i] + 1.0));
        rule.weights.push_back(0.5 * width * gl.weights[i]);
      }
    }
  }
  return rule;
}

int node_count_for(double tau, long distance) {
  if (tau < 0.0 || distance < 0) {
    throw ParameterError("node_count_for needs tau >= 0 and distance >= 0");
  }
  const int m = std::max(
      64, static_cast<int>(std::ceil(12.0 * (tau + static_cast<double>(distance)))));
  return m + m % 2;
}

std::complex<double> integrate_theta(
    const std::function<std::complex<double>(double)>& integrand,
    const QuadratureRule& rule) {
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const std::complex<double> value = integrand(rule.nodes[i]);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      std::ostringstream msg;
      msg << "integrand not finite at theta = " << rule.nodes[i];
      throw NumericalError(msg.str());
    }
    sum += rule.weights[i] * value;
  }
  return sum / (2.0 * std::numbers::pi);
}

}  // namespace spindefect
