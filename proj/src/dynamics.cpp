#include "spindefect/dynamics.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "spindefect/numerics.hpp"

namespace spindefect {

namespace {

const cplx kI{0.0, 1.0};

double side_sign(Side side) {
  switch (side) {
    case Side::Retarded:
      return 1.0;
    case Side::Advanced:
      return -1.0;
    case Side::OffBand:
      break;
  }
  throw ParameterError("scattering factor needs the + or - side");
}

// |(-1)^s J_{r-s} - J_{r+s} - i (J_{r+s+1} + J_{r+s-1}) / (2 alpha)|, 0 < s <= r
double reflected_combination(double alpha, Site s, Site r, double tau) {
  const int si = static_cast<int>(s);
  const int ri = static_cast<int>(r);
  const double direct = (si % 2 ? -1.0 : 1.0) * bessel_j(ri - si, tau);
  const double mirrored = bessel_j(ri + si, tau);
  const double leak = (bessel_j(ri + si + 1, tau) + bessel_j(ri + si - 1, tau)) / (2.0 * alpha);
  return std::abs(cplx(direct - mirrored, -leak));
}

}  // namespace

std::string to_string(Method method) {
  switch (method) {
    case Method::Oracle:
      return "oracle";
    case Method::Integral:
      return "integral";
    case Method::Asymptotic:
      return "asymptotic";
  }
  return "unknown";
}

Method parse_method(const std::string& name) {
  if (name == "oracle") return Method::Oracle;
  if (name == "integral") return Method::Integral;
  if (name == "asymptotic") return Method::Asymptotic;
  throw ParameterError("unknown method '" + name + "' (oracle|integral|asymptotic)");
}

TimeGrid TimeGrid::uniform(double t_max, double dt) {
  if (!(dt > 0.0) || !(t_max > 0.0)) {
    throw ParameterError("time grid needs t_max > 0 and dt > 0");
  }
  TimeGrid grid;
  const long steps = static_cast<long>(std::floor(t_max / dt + 1e-9));
  grid.t_values.reserve(steps + 1);
  for (long k = 0; k <= steps; ++k) grid.t_values.push_back(k * dt);
  return grid;
}

void TimeGrid::validate() const {
  if (t_values.empty()) throw ParameterError("time grid is empty");
  if (t_values.front() < 0.0) throw ParameterError("time grid starts below zero");
  for (std::size_t k = 1; k < t_values.size(); ++k) {
    if (!(t_values[k] > t_values[k - 1])) {
      throw ParameterError("time grid must be strictly ascending");
    }
  }
}

std::vector<double> TimeGrid::tau(double coupling_J) const {
  std::vector<double> out;
  out.reserve(t_values.size());
  for (double t : t_values) out.push_back(coupling_J * t);
  return out;
}

cplx scattering_factor(double theta, Site i, Site j, double alpha, Side side) {
  const double sign = side_sign(side);
  const double abs_theta = std::abs(theta);
  const cplx denom = sign * kI * std::sin(abs_theta) - alpha;
  if (std::abs(denom) == 0.0) {
    std::ostringstream msg;
    msg << "scattering factor singular at theta = " << theta << " for alpha = 0";
    throw SingularityError(msg.str());
  }
  return alpha * std::polar(1.0, sign * abs_theta * static_cast<double>(std::labs(i - j))) /
         denom;
}

cplx transition_amplitude_integral(const DefectLattice& lattice, Site sender,
                                   Site receiver, double t, int node_count) {
  if (t < 0.0) throw ParameterError("transition amplitude needs t >= 0");
  const Site l = lattice.defect_site;
  const Site r = receiver;
  const Site s = sender;
  const double alpha = lattice.alpha;
  const double h = lattice.field_h;
  const double J = lattice.coupling_J;

  const int nodes = node_count > 0
                        ? node_count
                        : node_count_for(J * t, std::labs(r - l) + std::labs(s - l));
  const QuadratureRule rule = theta_rule(nodes);

  const auto integrand = [&](double theta) -> cplx {
    const cplx evolution = std::polar(1.0, -(2.0 * h - J * std::cos(theta)) * t);
    const cplx direct = std::polar(1.0, theta * static_cast<double>(r - s));
    if (alpha == 0.0) return direct * evolution;
    const cplx g_out = scattering_factor(theta, r, l, alpha, Side::Retarded);
    const cplx g_in = scattering_factor(theta, l, s, alpha, Side::Advanced);
    const cplx sum = direct + std::polar(1.0, theta * static_cast<double>(l - s)) * g_out +
                     std::polar(1.0, theta * static_cast<double>(r - l)) * g_in +
                     g_out * g_in;
    return sum * evolution;
  };

  cplx f = integrate_theta(integrand, rule);
  if (alpha != 0.0) {
    const LocalizedState bound = localized_state(lattice);
    f += bound.amplitude(r) * bound.amplitude(s) * std::polar(1.0, -bound.energy_loc * t);
  }
  return f;
}

double asymptotic_concurrence_localized(double alpha, Site r, double tau) {
  if (r == 0) return 1.0 - 1.0 / (2.0 * alpha * alpha);
  if (tau == 0.0) return 0.0;
  const long m = std::labs(r);
  return std::abs(static_cast<double>(m) / (std::abs(alpha) * tau) *
                  bessel_j(static_cast<int>(m), tau));
}

double asymptotic_concurrence_cross(double alpha, long d, double tau) {
  if (d < 1) throw ParameterError("cross-defect distance must be >= 1");
  const int di = static_cast<int>(d);
  return std::abs(bessel_j(di + 1, tau) + bessel_j(di - 1, tau)) /
         (2.0 * std::abs(alpha));
}

double asymptotic_concurrence_reflected(double alpha, Site s, Site r, double tau) {
  if (!(s > 0 && r > s)) {
    throw ParameterError("reflected formula needs 0 < s < r on one side of the defect");
  }
  return reflected_combination(alpha, s, r, tau);
}

double asymptotic_concurrence(double alpha, Site sender, Site receiver,
                              Site defect_site, double tau) {
  if (alpha == 0.0) throw ParameterError("asymptotic formulas need alpha != 0");
  Site s = sender - defect_site;
  Site r = receiver - defect_site;
  // f_rs = f_sr, so put the defect-side site in the sender slot.
  if (r == 0) std::swap(s, r);
  if (s == 0) return asymptotic_concurrence_localized(alpha, r, tau);
  if ((s > 0) != (r > 0)) {
    return asymptotic_concurrence_cross(alpha, std::labs(s) + std::labs(r), tau);
  }
  // Same side: mirror to the positive half and order sender below receiver.
  s = std::labs(s);
  r = std::labs(r);
  if (r < s) std::swap(s, r);
  return reflected_combination(alpha, s, r, tau);
}

long oracle_min_sites(double tau_max, long max_site_offset) {
  return static_cast<long>(std::ceil(4.0 * tau_max)) + 4 * max_site_offset + 1;
}

AmplitudeSeries amplitude_series(const ChainSpec& spec, Site sender,
                                 Site receiver, const TimeGrid& grid,
                                 Method method) {
  spec.validate();
  grid.validate();
  AmplitudeSeries series{sender, receiver, method, grid, {}};
  series.values.reserve(grid.t_values.size());
  const DefectLattice lattice = spec.lattice();
  switch (method) {
    case Method::Oracle: {
      const RingPropagator ring(spec);
      for (double t : grid.t_values) series.values.push_back(ring.amplitude(sender, receiver, t));
      break;
    }
    case Method::Integral:
      for (double t : grid.t_values) {
        series.values.push_back(transition_amplitude_integral(lattice, sender, receiver, t));
      }
      break;
    case Method::Asymptotic:
      for (double t : grid.t_values) {
        series.values.push_back(asymptotic_concurrence(lattice.alpha, sender, receiver,
                                                       lattice.defect_site,
                                                       lattice.coupling_J * t));
      }
      break;
  }
  return series;
}

std::vector<double> concurrence_series(const AmplitudeSeries& series) {
  std::vector<double> out;
  out.reserve(series.values.size());
  for (const cplx& f : series.values) out.push_back(std::abs(f));
  return out;
}

std::vector<double> average_fidelity_series(const AmplitudeSeries& series) {
  std::vector<double> out;
  out.reserve(series.values.size());
  for (const cplx& f : series.values) out.push_back((std::norm(f + 1.0) + 2.0) / 6.0);
  return out;
}

}  // namespace spindefect
