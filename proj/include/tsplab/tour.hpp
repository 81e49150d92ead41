#pragma once

/// @file tour.hpp
/// @brief Tour and population types, objective evaluation and the
/// edge-difference diversity measure.

#include <cstdint>
#include <vector>

#include "tsplab/tsplib.hpp"

namespace tsplab {

class Rng;

/// A Hamiltonian cycle as a visit sequence over cities 0..m-1. The cycle
/// closes implicitly from the last city back to the first. The objective
/// value is cached alongside.
struct Tour {
    std::vector<int> order;
    std::int64_t cost = 0;
};

/// Ordered collection of tours plus a per-slot flag marking members that
/// have already been improved by the local search.
struct Population {
    std::vector<Tour> members;
    std::vector<bool> improved;

    int size() const noexcept { return static_cast<int>(members.size()); }
};

/// True iff order is a permutation of {0..m-1}.
bool is_permutation(const std::vector<int>& order, int m);

/// Sum of the m edge distances of the closed cycle.
std::int64_t tour_cost(const Instance& instance, const std::vector<int>& order);

/// Build a Tour from a visit order, evaluating its cost. Asserts
/// permutation validity in debug builds.
Tour make_tour(const Instance& instance, std::vector<int> order);

/// Uniformly random tour.
Tour random_tour(const Instance& instance, Rng& rng);

/// Number of undirected edges of `a` that are absent from `b`; symmetric,
/// in [0, m], and never 1.
int edge_distance(const Tour& a, const Tour& b);

/// True iff both tours traverse exactly the same undirected edge set
/// (i.e. they are equal up to rotation and reversal).
bool tours_equal(const Tour& a, const Tour& b);

/// Mean edge distance over all ordered pairs of distinct members,
/// sum d(s,s') / (n(n-1)). Throws std::invalid_argument for n < 2.
double population_diversity(const Population& pop);

/// Diversity estimated from `pair_cap` sampled ordered pairs; equals the
/// full sum when the population has no more pairs than the cap.
double population_diversity_sampled(const Population& pop, int pair_cap, Rng& rng);

} // namespace tsplab
