#pragma once

/// @file genetic_ops.hpp
/// @brief Crossover, mutation, selection schemes, elitism and the
/// parent-child competition primitive.

#include <utility>
#include <vector>

#include "tsplab/tour.hpp"

namespace tsplab {

class Rng;

/// OX (order crossover) with fixed cut points 0 <= i < j < m. The child
/// keeps p1.order[i..j] in place; the remaining positions, walked
/// cyclically from j+1, are filled with the missing cities in the cyclic
/// order they appear in p2 starting from position j+1.
Tour ox_crossover_at(const Instance& instance, const Tour& p1, const Tour& p2, int i, int j);

/// OX with uniformly random cut points.
Tour ox_crossover(const Instance& instance, const Tour& p1, const Tour& p2, Rng& rng);

/// Swap the cities at two positions; cost is updated incrementally.
Tour exchange_mutation_at(const Instance& instance, const Tour& t, int pos1, int pos2);

/// Exchange mutation at two distinct uniform positions.
Tour exchange_mutation(const Instance& instance, const Tour& t, Rng& rng);

/// Index of the better of two members sampled uniformly with replacement
/// (ties keep the first sample).
int binary_tournament(const Population& pop, Rng& rng);

/// Shuffle the member indices and pair each with its cyclic successor:
/// every member appears exactly once as left parent and once as right.
/// Throws std::invalid_argument for n < 2.
std::vector<std::pair<int, int>> randomized_adjacent_pairs(const Population& pop, Rng& rng);

/// The child replaces the parent only on strict cost improvement.
const Tour& compete(const Tour& parent, const Tour& child);

/// Replace the worst member (largest cost; ties resolved to the highest
/// index) with old_best.
void apply_elitism(Population& pop, const Tour& old_best, bool old_best_improved = false);

} // namespace tsplab
