#pragma once

/// @file construction.hpp
/// @brief Greedy randomized tour construction with a variable-size
/// restricted candidate list.

#include <utility>
#include <vector>

#include "tsplab/tour.hpp"

namespace tsplab {

class Rng;

/// Width parameter of the restricted candidate list: a candidate city c
/// qualifies when d(last, c) <= (1 + sigma) * d(last, nearest).
struct RclParams {
    double sigma = 0.1;
};

/// Per-step record of (chosen distance, best distance), for tests that
/// assert RCL membership.
using ConstructionLog = std::vector<std::pair<int, int>>;

/// Build a tour by repeatedly appending a uniform draw from the RCL of
/// unvisited cities, anchored at the last appended city. The start city is
/// uniform at random.
Tour greedy_randomized_tour(const Instance& instance, const RclParams& params, Rng& rng,
                            ConstructionLog* step_log = nullptr);

/// Complete an open path to a full tour with the same RCL rule, appending
/// only the cities absent from `partial`; the cycle closes at the end.
/// `partial` must be non-empty and duplicate-free.
Tour greedy_complete_path(const Instance& instance, const std::vector<int>& partial,
                          const RclParams& params, Rng& rng,
                          ConstructionLog* step_log = nullptr);

} // namespace tsplab
