#pragma once

#include <complex>
#include <vector>

#include "spindefect/model.hpp"

namespace spindefect {

/// Which determination of the lattice Green function to evaluate.
/// Retarded/Advanced are the two boundary values on the band cut
/// (z -> E +- i0); OffBand is the single-valued resolvent away from it.
enum class Side { Retarded, Advanced, OffBand };

/// Complex energy together with the band geometry it is measured against.
struct EnergyArgument {
  cplx z;
  double field_h = 1.0;
  double coupling_J = 1.0;

  /// x = (z - 2h) / J; the band is |x| <= 1 on the real axis.
  cplx x() const { return (z - 2.0 * field_h) / coupling_J; }
  bool in_band() const;

  static EnergyArgument at(double energy, const DefectLattice& lattice) {
    return EnergyArgument{energy, lattice.field_h, lattice.coupling_J};
  }
};

/// Unperturbed infinite-chain Green function G0(r, s; z).
///
/// Off the band, the square root is taken so that |-x + sqrt(x^2 - 1)| <= 1
/// and the element decays with |r - s|. On the band, Retarded and Advanced
/// select the +i and -i forms. Band edges throw SingularityError.
cplx g0(Site r, Site s, const EnergyArgument& z, Side side);

/// Dyson-resummed Green function of the single-defect chain:
/// G = G0 + G0|l> 2 eps / (1 - 2 eps G0(l,l)) <l|G0.
/// Throws PoleError at the bound-state energy.
cplx full_green(Site r, Site s, const EnergyArgument& z,
                const DefectLattice& lattice, Side side);

/// Bound state split off the band by the defect.
struct LocalizedState {
  double energy_loc = 0.0;
  double xi = 0.0;  // inverse localization length, per site
  double alpha = 0.0;
  Site defect_site = 0;

  /// Amplitude b_n on site n (offset measured from the defect). Negative
  /// everywhere for alpha < 0; alternating as (-1)^|n-l| for alpha > 0.
  double amplitude(Site n) const;

  double localization_length() const { return 1.0 / xi; }

  /// Sites within which |b_n| exceeds ~e^-40: ceil(40 / xi).
  long truncation_radius() const;

  /// b_n for n - l in [-radius, radius].
  std::vector<double> truncated_amplitudes() const;
};

/// xi(alpha) = -ln(sqrt(1 + alpha^2) - |alpha|), evaluated as asinh|alpha|.
double inverse_localization_length(double alpha);

/// Bound-state energy, amplitudes and xi. Throws NoBoundStateError for alpha = 0.
LocalizedState localized_state(const DefectLattice& lattice);

/// Un-normalized band eigenstate bracket at momentum theta:
/// e^{i theta n} + alpha e^{i|theta||n-l|} e^{i theta l} / (i|sin theta| - alpha).
/// The 1/sqrt(N+1) prefactor is left to the caller. Band edges
/// (sin theta = 0) throw SingularityError.
cplx band_amplitude(const DefectLattice& lattice, double theta, Site n);

/// Residue of G(r, s; z) at the bound-state pole, b_r * b_s.
double localized_residue(const DefectLattice& lattice, Site r, Site s);

}  // namespace spindefect
