#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "spindefect/errors.hpp"

namespace spindefect {

using cplx = std::complex<double>;

/// Site label along the ring. Signed labels in [-N/2, N/2] and storage labels
/// in [0, n_sites) are both accepted and reduced modulo the ring size.
using Site = long;

/// Storage index in [0, n_sites) for any signed site label.
long wrap_site(Site site, long n_sites);

/// Signed label in [-(n_sites-1)/2, n_sites/2] for any site label.
long signed_site(Site site, long n_sites);

/// Shortest distance between two sites around the ring.
long ring_distance(Site a, Site b, long n_sites);

bool same_site(Site a, Site b, long n_sites);

/// Thermodynamic-limit parameters of the defect lattice. This is all the
/// analytic Green-function results need; the ring size never enters.
struct DefectLattice {
  double field_h = 1.0;
  double coupling_J = 1.0;
  double alpha = 0.0;  // 2 * defect_eps / coupling_J
  Site defect_site = 0;

  double defect_eps() const { return 0.5 * alpha * coupling_J; }
  double band_min() const { return 2.0 * field_h - coupling_J; }
  double band_max() const { return 2.0 * field_h + coupling_J; }
};

/// Physical parameters of the closed XY ring with one field defect.
struct ChainSpec {
  long n_sites = 401;
  double field_h = 1.0;
  double coupling_J = 1.0;
  double defect_eps = 0.0;
  Site defect_site = 0;

  double alpha() const { return 2.0 * defect_eps / coupling_J; }
  DefectLattice lattice() const;

  /// Throws ParameterError unless n_sites >= 3, J > 0, 2h > J and alpha is finite.
  void validate() const;

  /// Same ring, defect given through the dimensionless alpha instead of eps.
  static ChainSpec with_alpha(long n_sites, double h, double J, double alpha,
                              Site defect_site = 0);
};

/// One-excitation Hamiltonian of the ring: diagonal 2h (+2 eps at the defect),
/// hopping -J/2 between ring neighbours including the wrap-around corners.
struct HamiltonianMatrix {
  ChainSpec spec;
  Eigen::MatrixXd matrix;
};

struct Spectrum {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // orthonormal columns

  long size() const { return eigenvalues.size(); }
};

struct WaveFunction {
  Eigen::VectorXcd amplitudes;

  double norm() const { return amplitudes.norm(); }
  long size() const { return amplitudes.size(); }

  /// Single excitation localized on one site.
  static WaveFunction site_state(long n_sites, Site site);
};

HamiltonianMatrix build_hamiltonian(const ChainSpec& spec);

/// Full eigendecomposition of a real symmetric matrix, eigenvalues ascending.
Spectrum diagonalize(const Eigen::MatrixXd& symmetric);
Spectrum diagonalize(const HamiltonianMatrix& hamiltonian);

/// psi(t) = sum_k exp(-i lambda_k t) <v_k|psi0> v_k
WaveFunction evolve_state(const Spectrum& spectrum, const WaveFunction& psi0,
                          double t);

/// Finite-ring propagator built once from a ChainSpec and reused for many
/// amplitude evaluations. Read-only after construction.
class RingPropagator {
 public:
  explicit RingPropagator(const ChainSpec& spec);

  const ChainSpec& spec() const { return spec_; }
  const Spectrum& spectrum() const { return spectrum_; }
  long n_sites() const { return spec_.n_sites; }

  /// f_rs(t) = <r| exp(-iHt) |s>
  cplx amplitude(Site sender, Site receiver, double t) const;

  /// All amplitudes <r| exp(-iHt) |s> indexed by storage position r.
  Eigen::VectorXcd column(Site sender, double t) const;

  WaveFunction evolve(const WaveFunction& psi0, double t) const;

 private:
  ChainSpec spec_;
  Spectrum spectrum_;
};

/// One-shot <r| exp(-iHt) |s> on the finite ring. Diagonalizes on every call;
/// use RingPropagator for repeated evaluation.
cplx transition_amplitude_numeric(const ChainSpec& spec, Site sender,
                                  Site receiver, double t);

}  // namespace spindefect
