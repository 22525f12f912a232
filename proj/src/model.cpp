#include "spindefect/model.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace spindefect {

long wrap_site(Site site, long n_sites) {
  if (n_sites <= 0) throw ParameterError("ring size must be positive");
  long k = site % n_sites;
  return k < 0 ? k + n_sites : k;
}

long signed_site(Site site, long n_sites) {
  long k = wrap_site(site, n_sites);
  return k <= n_sites / 2 ? k : k - n_sites;
}

long ring_distance(Site a, Site b, long n_sites) {
  long d = std::labs(wrap_site(a, n_sites) - wrap_site(b, n_sites));
  return std::min(d, n_sites - d);
}

bool same_site(Site a, Site b, long n_sites) {
  return wrap_site(a, n_sites) == wrap_site(b, n_sites);
}

DefectLattice ChainSpec::lattice() const {
  return DefectLattice{field_h, coupling_J, alpha(), defect_site};
}

void ChainSpec::validate() const {
  std::ostringstream msg;
  if (n_sites < 3) {
    msg << "n_sites must be >= 3 (got " << n_sites << ")";
  } else if (!(coupling_J > 0.0) || !std::isfinite(coupling_J)) {
    msg << "coupling J must be positive and finite (got " << coupling_J << ")";
  } else if (!std::isfinite(field_h) || !(2.0 * field_h > coupling_J)) {
    msg << "field must satisfy 2h > J (got h=" << field_h
        << ", J=" << coupling_J << ")";
  } else if (!std::isfinite(alpha())) {
    msg << "defect strength must be finite (got eps=" << defect_eps << ")";
  } else {
    return;
  }
  throw ParameterError(msg.str());
}

ChainSpec ChainSpec::with_alpha(long n_sites, double h, double J, double alpha,
                                Site defect_site) {
  return ChainSpec{n_sites, h, J, 0.5 * alpha * J, defect_site};
}

WaveFunction WaveFunction::site_state(long n_sites, Site site) {
  WaveFunction psi{Eigen::VectorXcd::Zero(n_sites)};
  psi.amplitudes(wrap_site(site, n_sites)) = 1.0;
  return psi;
}

HamiltonianMatrix build_hamiltonian(const ChainSpec& spec) {
  spec.validate();
  const long n = spec.n_sites;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  const double hop = -0.5 * spec.coupling_J;
  for (long i = 0; i < n; ++i) {
    h(i, i) = 2.0 * spec.field_h;
    const long j = (i + 1) % n;
    h(i, j) = hop;
    h(j, i) = hop;
  }
  h(wrap_site(spec.defect_site, n), wrap_site(spec.defect_site, n)) +=
      2.0 * spec.defect_eps;
  return HamiltonianMatrix{spec, std::move(h)};
}

Spectrum diagonalize(const Eigen::MatrixXd& symmetric) {
  if (symmetric.rows() != symmetric.cols() || symmetric.rows() == 0) {
    throw ParameterError("diagonalize expects a non-empty square matrix");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetric);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "symmetric eigensolver failed (order " << symmetric.rows()
        << ", status " << static_cast<int>(solver.info())
        << ", max QR iterations per eigenvalue "
        << Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>::m_maxIterations
        << ")";
    throw NumericalError(msg.str());
  }
  return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

Spectrum diagonalize(const HamiltonianMatrix& hamiltonian) {
  return diagonalize(hamiltonian.matrix);
}

WaveFunction evolve_state(const Spectrum& spectrum, const WaveFunction& psi0,
                          double t) {
  if (psi0.size() != spectrum.size()) {
    std::ostringstream msg;
    msg << "state has " << psi0.size() << " sites but spectrum has "
        << spectrum.size();
    throw ParameterError(msg.str());
  }
  if (t == 0.0) return psi0;
  const Eigen::MatrixXd& v = spectrum.eigenvectors;
  Eigen::VectorXcd coeff = v.transpose().cast<cplx>() * psi0.amplitudes;
  for (long k = 0; k < coeff.size(); ++k) {
    coeff(k) *= std::polar(1.0, -spectrum.eigenvalues(k) * t);
  }
  return WaveFunction{v.cast<cplx>() * coeff};
}

RingPropagator::RingPropagator(const ChainSpec& spec)
    : spec_(spec), spectrum_(diagonalize(build_hamiltonian(spec))) {}

cplx RingPropagator::amplitude(Site sender, Site receiver, double t) const {
  const long n = n_sites();
  if (t == 0.0) return same_site(sender, receiver, n) ? 1.0 : 0.0;
  const auto vs = spectrum_.eigenvectors.row(wrap_site(sender, n));
  const auto vr = spectrum_.eigenvectors.row(wrap_site(receiver, n));
  cplx sum = 0.0;
  for (long k = 0; k < n; ++k) {
    sum += vr(k) * vs(k) * std::polar(1.0, -spectrum_.eigenvalues(k) * t);
  }
  return sum;
}

Eigen::VectorXcd RingPropagator::column(Site sender, double t) const {
  const long n = n_sites();
  if (t == 0.0) return WaveFunction::site_state(n, sender).amplitudes;
  const auto vs = spectrum_.eigenvectors.row(wrap_site(sender, n));
  Eigen::VectorXcd phased(n);
  for (long k = 0; k < n; ++k) {
    phased(k) = vs(k) * std::polar(1.0, -spectrum_.eigenvalues(k) * t);
  }
  return spectrum_.eigenvectors.cast<cplx>() * phased;
}

WaveFunction RingPropagator::evolve(const WaveFunction& psi0, double t) const {
  return evolve_state(spectrum_, psi0, t);
}

cplx transition_amplitude_numeric(const ChainSpec& spec, Site sender,
                                  Site receiver, double t) {
  return RingPropagator(spec).amplitude(sender, receiver, t);
}

}  // namespace spindefect
