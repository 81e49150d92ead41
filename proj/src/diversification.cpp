#include "tsplab/diversification.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "tsplab/rng.hpp"

namespace tsplab {

namespace {

// Indices of pop sorted by (cost, original index) ascending.
std::vector<int> sorted_by_cost(const Population& pop) {
    std::vector<int> idx(pop.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (pop.members[a].cost != pop.members[b].cost)
            return pop.members[a].cost < pop.members[b].cost;
        return a < b;
    });
    return idx;
}

DiversificationResult diversify(const Population& pop, Characteristic g, const Instance& instance,
                                const RclParams& params, Rng& rng) {
    const int n = pop.size();
    assert(n >= 1);
    const std::vector<int> order = sorted_by_cost(pop);

    DiversificationResult result;
    result.population.members.reserve(n);
    result.population.improved.reserve(n);

    // Walk equal-cost groups; a member is a duplicate iff an already-kept
    // member of the same group shares its g-key. For the objective
    // characteristic sharing the group IS sharing the key.
    int group_begin = 0;
    std::vector<int> kept_in_group;
    for (int i = 0; i < n; ++i) {
        const Tour& current = pop.members[order[i]];
        if (i == group_begin || current.cost != pop.members[order[group_begin]].cost) {
            group_begin = i;
            kept_in_group.clear();
        }
        bool duplicate = false;
        if (!kept_in_group.empty()) {
            if (g == Characteristic::Objective) {
                duplicate = true;
            } else {
                for (int kept : kept_in_group) {
                    if (tours_equal(pop.members[kept], current)) {
                        duplicate = true;
                        break;
                    }
                }
            }
        }
        if (duplicate) {
            ++result.num_replaced;
        } else {
            kept_in_group.push_back(order[i]);
            result.population.members.push_back(current);
            result.population.improved.push_back(!pop.improved.empty() &&
                                                 pop.improved[order[i]]);
        }
    }

    for (int r = 0; r < result.num_replaced; ++r) {
        result.population.members.push_back(greedy_randomized_tour(instance, params, rng));
        result.population.improved.push_back(false);
    }
    assert(result.population.size() == n);
    return result;
}

} // namespace

DiversificationResult greedy_diversification(const Population& pop, Characteristic g,
                                             const Instance& instance, const RclParams& params,
                                             Rng& rng) {
    return diversify(pop, g, instance, params, rng);
}

DiversificationResult greedy_diversification_id(const Population& pop, const Instance& instance,
                                                const RclParams& params, Rng& rng) {
    return diversify(pop, Characteristic::Identity, instance, params, rng);
}

} // namespace tsplab
