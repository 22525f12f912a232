#include "spindefect/entanglement.hpp"

#include <cmath>
#include <cstdlib>

#include "spindefect/greens.hpp"

namespace spindefect {

double pair_concurrence(const WaveFunction& state, Site i, Site j) {
  const long n = state.size();
  if (same_site(i, j, n)) {
    throw ParameterError("pair concurrence needs two distinct sites");
  }
  return 2.0 * std::abs(state.amplitudes(wrap_site(i, n))) *
         std::abs(state.amplitudes(wrap_site(j, n)));
}

double localized_concurrence(const DefectLattice& lattice, Site i, Site j) {
  if (i == j) throw ParameterError("pair concurrence needs two distinct sites");
  const LocalizedState state = localized_state(lattice);
  const double a = std::abs(lattice.alpha);
  const long span = std::labs(i - lattice.defect_site) + std::labs(j - lattice.defect_site);
  return 2.0 * a / std::sqrt(1.0 + a * a) * std::exp(-state.xi * static_cast<double>(span));
}

ConcurrenceProfile concurrence_profile(const DefectLattice& lattice,
                                       Site reference, long j_max) {
  if (j_max < 0) throw ParameterError("j_max must be non-negative");
  ConcurrenceProfile profile;
  profile.reference = reference;
  profile.lattice = lattice;
  for (long m = -j_max; m <= j_max; ++m) {
    const Site j = lattice.defect_site + m;
    if (j == reference) continue;
    profile.sites.push_back(j);
    profile.values.push_back(localized_concurrence(lattice, reference, j));
  }
  return profile;
}

}  // namespace spindefect
