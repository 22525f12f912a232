#pragma once

#include <vector>

#include "spindefect/model.hpp"

namespace spindefect {

/// Long-time split of the tangle of an excitation sent from `sender`:
/// transmitted past the defect (T), kept on the sender's side (R), and the
/// remainder (weight on the defect site itself plus any numerical leftover).
struct TransportResult {
  double alpha = 0.0;
  Site sender = 0;
  double transmission = 0.0;
  double reflection = 0.0;
  double residual = 0.0;
  double t_star = 0.0;
  double window_end = 0.0;  // samples are averaged over [t_star, window_end]
  int samples = 0;
};

struct TransportOptions {
  double t_star_fraction = 0.35;  // t_star = fraction * n_sites / J
  double window_factor = 1.1;     // window_end = factor * t_star
  int samples = 16;
};

/// Per-site tangle C_r^2 = |c_r|^2, indexed by storage position.
std::vector<double> tangle_distribution(const WaveFunction& state);

/// Sender must sit at least 3 sites on the negative side of the defect; the
/// ring must be large enough that no front wraps around inside the window.
TransportResult transport_coefficients(const ChainSpec& spec, Site sender,
                                       const TransportOptions& options = {});

/// Smallest ring satisfying the no-wrap condition of transport_coefficients.
long transport_min_sites(long sender_distance, const TransportOptions& options = {});

/// Momentum-averaged transmission probability through the defect,
/// (1/pi) int_0^pi sin^2 / (sin^2 + alpha^2) = 1 - |alpha| / sqrt(1 + alpha^2).
/// Applies to the flux actually incident on the defect; a point source sends
/// half its weight the other way.
double analytic_transmission_reference(double alpha);

/// transport_coefficients for each alpha in turn on a copy of `base`
/// (only the defect strength varies). Points run concurrently when
/// `threads` > 1; results keep the input order.
std::vector<TransportResult> transport_sweep(const std::vector<double>& alphas,
                                             Site sender, const ChainSpec& base,
                                             const TransportOptions& options = {},
                                             unsigned threads = 0);

}  // namespace spindefect
