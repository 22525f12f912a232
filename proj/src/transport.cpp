#include "spindefect/transport.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace spindefect {

namespace {

// Sites kept free between the outermost front and the antipode of the sender.
constexpr long kWrapMargin = 16;

}  // namespace

std::vector<double> tangle_distribution(const WaveFunction& state) {
  std::vector<double> out(state.size());
  for (long r = 0; r < state.size(); ++r) out[r] = std::norm(state.amplitudes(r));
  return out;
}

long transport_min_sites(long sender_distance, const TransportOptions& options) {
  // Fronts travel at most one site per unit J t. Need
  // |s| + window_factor * t_star_fraction * n + margin <= n / 2.
  const double reach = options.window_factor * options.t_star_fraction;
  if (!(reach < 0.5)) {
    throw ConfigurationError("transport window reaches the antipode for any ring size");
  }
  return static_cast<long>(std::ceil((sender_distance + kWrapMargin) / (0.5 - reach)));
}

TransportResult transport_coefficients(const ChainSpec& spec, Site sender,
                                       const TransportOptions& options) {
  spec.validate();
  if (options.samples < 1 || !(options.t_star_fraction > 0.0) ||
      !(options.window_factor >= 1.0)) {
    throw ParameterError("transport options need samples >= 1, t_star_fraction > 0, "
                         "window_factor >= 1");
  }
  const long n = spec.n_sites;
  const Site offset = sender - spec.defect_site;
  if (offset > -3) {
    std::ostringstream msg;
    msg << "sender must be at least 3 sites on the negative side of the defect (got "
        << offset << ")";
    throw ParameterError(msg.str());
  }
  const long needed = transport_min_sites(std::labs(offset), options);
  if (n < needed) {
    std::ostringstream msg;
    msg << "ring too small for the transport window: n_sites = " << n
        << ", minimum n_sites = " << needed;
    throw ConfigurationError(msg.str());
  }

  const RingPropagator ring(spec);
  TransportResult result;
  result.alpha = spec.alpha();
  result.sender = sender;
  result.t_star = options.t_star_fraction * static_cast<double>(n) / spec.coupling_J;
  result.window_end = options.window_factor * result.t_star;
  result.samples = options.samples;

  std::vector<int> side(n);
  for (long k = 0; k < n; ++k) {
    const long rel = signed_site(k - spec.defect_site, n);
    side[k] = rel > 0 ? 1 : (rel < 0 ? -1 : 0);
  }

  double transmitted = 0.0;
  double reflected = 0.0;
  double at_defect = 0.0;
  double total = 0.0;
  for (int k = 0; k < options.samples; ++k) {
    const double t = options.samples == 1
                         ? result.t_star
                         : result.t_star + (result.window_end - result.t_star) * k /
                                               (options.samples - 1);
    const Eigen::VectorXcd c = ring.column(sender, t);
    for (long r = 0; r < n; ++r) {
      const double p = std::norm(c(r));
      total += p;
      if (side[r] > 0) {
        transmitted += p;
      } else if (side[r] < 0) {
        reflected += p;
      } else {
        at_defect += p;
      }
    }
  }
  const double m = options.samples;
  result.transmission = transmitted / m;
  result.reflection = reflected / m;
  // Whatever the unitary evolution did not put on a side (the defect site plus
  // rounding) is residual, so the three parts sum to one by construction.
  result.residual = at_defect / m + std::max(0.0, 1.0 - total / m);
  return result;
}

double analytic_transmission_reference(double alpha) {
  const double a = std::abs(alpha);
  if (std::isinf(a)) return 0.0;
  return 1.0 - a / std::sqrt(1.0 + a * a);
}

std::vector<TransportResult> transport_sweep(const std::vector<double>& alphas,
                                             Site sender, const ChainSpec& base,
                                             const TransportOptions& options,
                                             unsigned threads) {
  std::vector<TransportResult> results(alphas.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, alphas.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::size_t i = next++; i < alphas.size(); i = next++) {
      try {
        ChainSpec spec = base;
        spec.defect_eps = 0.5 * alphas[i] * base.coupling_J;
        results[i] = transport_coefficients(spec, sender, options);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = alphas.size();
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace spindefect
