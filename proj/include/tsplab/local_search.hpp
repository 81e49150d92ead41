#pragma once

/// @file local_search.hpp
/// @brief 2-opt tour improvement with k-nearest candidate lists and
/// don't-look bits, run to local optimality.

#include <span>
#include <vector>

#include "tsplab/tour.hpp"

namespace tsplab {

/// Exact k-nearest neighbours per city under the instance distance, each
/// list ascending with ties broken by city index. Immutable and shareable.
class NeighborLists {
  public:
    NeighborLists(int k, std::vector<int> flat) : k_(k), flat_(std::move(flat)) {}

    int k() const noexcept { return k_; }

    std::span<const int> of(int city) const {
        return {flat_.data() + static_cast<std::size_t>(city) * k_, static_cast<std::size_t>(k_)};
    }

  private:
    int k_;
    std::vector<int> flat_;
};

/// Build exact k-nearest lists; requires 1 <= k < m.
NeighborLists build_neighbor_lists(const Instance& instance, int k);

struct LocalSearchOptions {
    /// Also try relocating segments of length 1-3 (or-opt moves).
    bool or_opt = false;
};

/// First-improvement 2-opt restricted to moves whose candidate endpoint
/// comes from the neighbor lists. The result never costs more than the
/// input and every accepted move strictly improves.
Tour two_opt(const Instance& instance, const Tour& t, const NeighborLists& nl,
             const LocalSearchOptions& options = {});

} // namespace tsplab
