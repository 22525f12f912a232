#pragma once

#include <string>
#include <vector>

#include "spindefect/greens.hpp"
#include "spindefect/model.hpp"

namespace spindefect {

/// How a transition amplitude is obtained.
///  - Oracle: exact spectral propagation on the finite ring.
///  - Integral: thermodynamic-limit band integral plus bound-state pole term.
///  - Asymptotic: large-|alpha| Bessel formulas; moduli only, phase unavailable.
enum class Method { Oracle, Integral, Asymptotic };

std::string to_string(Method method);
Method parse_method(const std::string& name);

struct TimeGrid {
  std::vector<double> t_values;  // strictly ascending, t_values[0] >= 0

  /// 0, dt, 2 dt, ... up to t_max inclusive (within dt * 1e-9).
  static TimeGrid uniform(double t_max, double dt);
  void validate() const;
  std::vector<double> tau(double coupling_J) const;
};

struct AmplitudeSeries {
  Site sender = 0;
  Site receiver = 0;
  Method method = Method::Oracle;
  TimeGrid grid;
  std::vector<cplx> values;
};

/// g^(+-)_{i,j} = alpha e^{+-i|theta||i-j|} / (+-i sin|theta| - alpha).
/// `side` must be Retarded (+) or Advanced (-).
cplx scattering_factor(double theta, Site i, Site j, double alpha, Side side);

/// f_rs(t) on the infinite chain: the band integral over theta of the
/// free, singly scattered and doubly scattered terms, plus the bound-state
/// residue b_r b_s e^{-i E_loc t} when alpha != 0.
/// `node_count` overrides node_count_for(J t, |r - l| + |s - l|) when > 0.
cplx transition_amplitude_integral(const DefectLattice& lattice, Site sender,
                                   Site receiver, double t, int node_count = 0);

/// Case-dispatched large-|alpha| estimate of |f_rs(tau)|, picking the
/// storage, cross-defect or same-side reflection formula from the geometry.
double asymptotic_concurrence(double alpha, Site sender, Site receiver,
                              Site defect_site, double tau);

/// Sender on the defect: 1 - 1/(2 alpha^2) at r = 0, |r J_r(tau)| / (|alpha| tau)
/// otherwise (r measured from the defect).
double asymptotic_concurrence_localized(double alpha, Site r, double tau);

/// Sender and receiver on opposite sides at total distance d = |r| + |s|:
/// |J_{d+1}(tau) + J_{d-1}(tau)| / (2 |alpha|).
double asymptotic_concurrence_cross(double alpha, long d, double tau);

/// Same side of the defect, 0 < s < r:
/// |(-1)^s J_{r-s} - J_{r+s} - i (J_{r+s+1} + J_{r+s-1}) / (2 alpha)|.
double asymptotic_concurrence_reflected(double alpha, Site s, Site r, double tau);

/// Amplitude of `receiver` for an excitation started on `sender`, on a grid.
/// Oracle uses the ring in `spec`; Integral and Asymptotic use spec.lattice().
AmplitudeSeries amplitude_series(const ChainSpec& spec, Site sender,
                                 Site receiver, const TimeGrid& grid,
                                 Method method);

/// C_r(t) = |f_rs(t)|
std::vector<double> concurrence_series(const AmplitudeSeries& series);

/// <F>(t) = (|f_rs(t) + 1|^2 + 2) / 6, with f taken at its computed phase.
std::vector<double> average_fidelity_series(const AmplitudeSeries& series);

/// Smallest ring on which a ballistic front from the sender cannot wrap
/// around before tau_max: 4 tau_max + 4 max(|r|, |s|) + 1.
long oracle_min_sites(double tau_max, long max_site_offset);

}  // namespace spindefect
