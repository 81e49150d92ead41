#pragma once

/// @file diversification.hpp
/// @brief Greedy diversification: replace duplicate population members
/// (under a characteristic function) with fresh greedy randomized tours.

#include "tsplab/construction.hpp"
#include "tsplab/tour.hpp"

namespace tsplab {

class Rng;

/// Characteristic function g mapping a tour to a duplicate-detection key.
/// Identity: keys are equal iff the tours traverse the same undirected
/// edge set (equal costs are a necessary condition, checked first).
/// Objective: keys are equal iff the costs are equal.
enum class Characteristic { Identity, Objective };

struct DiversificationResult {
    Population population;
    /// Number of members discarded and rebuilt greedily.
    int num_replaced = 0;
};

/// Sort members by cost ascending (stable on the original index), keep
/// the first occurrence of every g-key, and append one fresh greedy
/// randomized tour per discarded duplicate. Population size is preserved
/// and the best member always survives. Kept members keep their
/// local-search flags; injected tours start unimproved.
DiversificationResult greedy_diversification(const Population& pop, Characteristic g,
                                             const Instance& instance, const RclParams& params,
                                             Rng& rng);

/// Identity-characteristic specialization: after the stable sort by cost,
/// only members inside the same equal-cost group can be duplicates, so the
/// scan compares tours within each group.
DiversificationResult greedy_diversification_id(const Population& pop, const Instance& instance,
                                                const RclParams& params, Rng& rng);

} // namespace tsplab
