#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "degdiam/cayley.hpp"
#include "degdiam/group.hpp"
#include "degdiam/rng.hpp"

namespace degdiam {

/// Largest possible vertex count of a graph with max degree delta and
/// diameter D: 1 + delta + delta*(delta-1) + ... + delta*(delta-1)^(D-1),
/// which collapses to 2D + 1 when delta = 2.
struct MooreBound {
    std::int64_t value = 0;
    /// True when the exact value exceeds the 64-bit range; value is then
    /// clamped to the maximum.
    bool saturated = false;
};

/// Throws BadParameter unless delta >= 2 and diameter >= 1.
MooreBound moore_bound(int delta, int diameter);

/// Draws an inverse-closed identity-free set of exactly delta distinct
/// elements: i involutions plus (delta - i)/2 inverse pairs, i uniform among
/// values of delta's parity in [0, delta] (forced to 0 when |G| is odd, which
/// rules out involutions entirely). Elements are drawn by rejection with a
/// budget of 64*delta draws per slot.
/// Throws InfeasibleDegree (delta odd with no involutions available, or
/// delta > |G| - 1) and RetryBudgetExhausted (budget spent on rejections).
GeneratorSet sample_generator_set(const Group& group, int delta, SplitMix64& rng);

struct SearchConfig {
    Group group;
    int delta = 2;
    int target_diameter = 1;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    std::int64_t max_hits = 16;
};

struct SearchHit {
    std::int64_t trial_index = 0;
    GeneratorSet generators;
    CayleyStats stats;
};

struct SearchSummary {
    std::int64_t trials = 0;
    std::int64_t connected = 0;
    /// Smallest diameter among connected trials, hit or not.
    std::optional<int> best_diameter;
};

struct SearchResult {
    std::vector<SearchHit> hits;
    SearchSummary summary;
};

/// Runs config.trials independent sampling trials; trial t draws from an RNG
/// stream derived from (seed, t), so results are identical across runs and
/// across worker counts. A hit is a connected set of degree delta with
/// diameter <= target_diameter; up to max_hits hits with the lowest trial
/// indices are returned. Trials whose sampler exhausts its retry budget count
/// as failed trials.
/// Throws MooreInfeasible when |G| exceeds moore_bound(delta, target_diameter)
/// (no such graph can have |G| vertices) and InfeasibleDegree for delta out of
/// range or of impossible parity.
SearchResult random_search(const SearchConfig& config, int threads = 1);

/// All valid (m, n, a) with min_order <= m*n <= moore_bound(delta, diameter),
/// ordered by descending m*n, then ascending m. Per (m, n) the default yields
/// one spec with the smallest a of maximal multiplicative order among units
/// whose order divides m; exhaustive additionally yields every smaller-order
/// unit (descending order, then ascending a). Truncated at limit.
std::vector<SemidirectCyclicSpec> enumerate_cyclic_specs(int delta, int diameter,
                                                         std::int64_t min_order,
                                                         std::size_t limit,
                                                         bool exhaustive = false);

}  // namespace degdiam
