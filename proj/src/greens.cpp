#include "spindefect/greens.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace spindefect {

namespace {

constexpr double kEdgeTolerance = 1e-14;
constexpr double kPoleTolerance = 1e-13;
const cplx kI{0.0, 1.0};

}  // namespace

bool EnergyArgument::in_band() const {
  const cplx xv = x();
  return xv.imag() == 0.0 && std::abs(xv.real()) <= 1.0;
}

cplx g0(Site r, Site s, const EnergyArgument& z, Side side) {
  const cplx x = z.x();
  const double J = z.coupling_J;
  const long d = std::labs(r - s);

  if (x.imag() == 0.0 && std::abs(std::abs(x.real()) - 1.0) < kEdgeTolerance) {
    std::ostringstream msg;
    msg << "G0 is singular at the band edge (x = " << x.real() << ")";
    throw SingularityError(msg.str());
  }

  if (side == Side::OffBand) {
    if (z.in_band()) {
      throw ParameterError("off-band G0 requested for an energy inside the band");
    }
    cplx root = std::sqrt(x * x - 1.0);
    if (std::abs(-x + root) > 1.0) root = -root;
    return std::pow(-x + root, static_cast<double>(d)) / (J * root);
  }

  if (!z.in_band()) {
    throw ParameterError("band-side G0 requested for an energy outside the band");
  }
  const double xr = x.real();
  const double root = std::sqrt(1.0 - xr * xr);
  const double sign = side == Side::Retarded ? 1.0 : -1.0;
  const cplx base{-xr, sign * root};
  return std::pow(base, static_cast<double>(d)) / (sign * kI * J * root);
}

cplx full_green(Site r, Site s, const EnergyArgument& z,
                const DefectLattice& lattice, Side side) {
  const Site l = lattice.defect_site;
  const double two_eps = lattice.alpha * lattice.coupling_J;
  const cplx bare = g0(r, s, z, side);
  if (two_eps == 0.0) return bare;
  const cplx denom = 1.0 - two_eps * g0(l, l, z, side);
  if (std::abs(denom) < kPoleTolerance) {
    throw PoleError("full Green function evaluated at the bound-state pole");
  }
  return bare + g0(r, l, z, side) * two_eps / denom * g0(l, s, z, side);
}

double inverse_localization_length(double alpha) {
  return std::asinh(std::abs(alpha));
}

double LocalizedState::amplitude(Site n) const {
  const long m = std::labs(n - defect_site);
  const double a = std::abs(alpha);
  const double scale = std::sqrt(a) / std::pow(1.0 + a * a, 0.25);
  const double decay = scale * std::exp(-xi * static_cast<double>(m));
  if (alpha < 0.0) return -decay;
  return (m % 2 ? -1.0 : 1.0) * decay;
}

long LocalizedState::truncation_radius() const {
  return static_cast<long>(std::ceil(40.0 / xi));
}

std::vector<double> LocalizedState::truncated_amplitudes() const {
  const long radius = truncation_radius();
  std::vector<double> out;
  out.reserve(2 * radius + 1);
  for (long m = -radius; m <= radius; ++m) out.push_back(amplitude(defect_site + m));
  return out;
}

LocalizedState localized_state(const DefectLattice& lattice) {
  if (lattice.alpha == 0.0) {
    throw NoBoundStateError("no bound state exists for a vanishing defect (alpha = 0)");
  }
  const double alpha = lattice.alpha;
  const double shift = lattice.coupling_J * std::sqrt(1.0 + alpha * alpha);
  LocalizedState state;
  state.alpha = alpha;
  state.defect_site = lattice.defect_site;
  state.xi = inverse_localization_length(alpha);
  state.energy_loc = alpha < 0.0 ? 2.0 * lattice.field_h - shift
                                 : 2.0 * lattice.field_h + shift;
  return state;
}

cplx band_amplitude(const DefectLattice& lattice, double theta, Site n) {
  const double abs_sin = std::abs(std::sin(theta));
  if (abs_sin < kEdgeTolerance) {
    std::ostringstream msg;
    msg << "band amplitude is singular at the band edge (theta = " << theta << ")";
    throw SingularityError(msg.str());
  }
  const double alpha = lattice.alpha;
  const Site l = lattice.defect_site;
  const cplx plane = std::polar(1.0, theta * static_cast<double>(n));
  if (alpha == 0.0) return plane;
  const cplx scattered =
      alpha * std::polar(1.0, std::abs(theta) * static_cast<double>(std::labs(n - l))) *
      std::polar(1.0, theta * static_cast<double>(l)) / (kI * abs_sin - alpha);
  return plane + scattered;
}

double localized_residue(const DefectLattice& lattice, Site r, Site s) {
  const LocalizedState state = localized_state(lattice);
  return state.amplitude(r) * state.amplitude(s);
}

}  // namespace spindefect
