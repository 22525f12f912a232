#pragma once

#include <vector>

#include "spindefect/model.hpp"

namespace spindefect {

/// Concurrence of the pair (i, j) in a single-excitation pure state,
/// 2 |c_i c_j|. Throws ParameterError for i == j.
double pair_concurrence(const WaveFunction& state, Site i, Site j);

/// Concurrence between sites i and j carried by the bound state,
/// (2|alpha| / sqrt(1 + alpha^2)) exp(-xi (|i - l| + |j - l|)).
double localized_concurrence(const DefectLattice& lattice, Site i, Site j);

struct ConcurrenceProfile {
  Site reference = 0;
  std::vector<Site> sites;      // ascending, reference excluded
  std::vector<double> values;   // C(reference, sites[k])
  DefectLattice lattice;
};

/// Bound-state concurrence between `reference` and every j with
/// |j - l| <= j_max, j != reference.
ConcurrenceProfile concurrence_profile(const DefectLattice& lattice,
                                       Site reference, long j_max);

}  // namespace spindefect
