#include "tsplab/tour.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

#include "tsplab/rng.hpp"

namespace tsplab {

bool is_permutation(const std::vector<int>& order, int m) {
    if (static_cast<int>(order.size()) != m)
        return false;
    std::vector<bool> seen(m, false);
    for (int city : order) {
        if (city < 0 || city >= m || seen[city])
            return false;
        seen[city] = true;
    }
    return true;
}

std::int64_t tour_cost(const Instance& instance, const std::vector<int>& order) {
    assert(is_permutation(order, instance.num_cities()));
    const int m = instance.num_cities();
    std::int64_t total = 0;
    for (int i = 0; i + 1 < m; ++i)
        total += instance.distance(order[i], order[i + 1]);
    total += instance.distance(order[m - 1], order[0]);
    return total;
}

Tour make_tour(const Instance& instance, std::vector<int> order) {
    Tour t;
    t.cost = tour_cost(instance, order);
    t.order = std::move(order);
    return t;
}

Tour random_tour(const Instance& instance, Rng& rng) {
    std::vector<int> order(instance.num_cities());
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    return make_tour(instance, std::move(order));
}

namespace {

// Fills succ/pred with each city's cyclic neighbours in `order`.
void neighbor_map(const std::vector<int>& order, std::vector<int>& succ, std::vector<int>& pred) {
    const int m = static_cast<int>(order.size());
    succ.resize(m);
    pred.resize(m);
    for (int i = 0; i < m; ++i) {
        const int u = order[i];
        const int v = order[(i + 1) % m];
        succ[u] = v;
        pred[v] = u;
    }
}

} // namespace

int edge_distance(const Tour& a, const Tour& b) {
    const int m = static_cast<int>(a.order.size());
    assert(b.order.size() == a.order.size());
    static thread_local std::vector<int> succ, pred;
    neighbor_map(b.order, succ, pred);
    int missing = 0;
    for (int i = 0; i < m; ++i) {
        const int u = a.order[i];
        const int v = a.order[(i + 1) % m];
        if (succ[u] != v && pred[u] != v)
            ++missing;
    }
    return missing;
}

bool tours_equal(const Tour& a, const Tour& b) {
    if (a.order.size() != b.order.size() || a.cost != b.cost)
        return false;
    return edge_distance(a, b) == 0;
}

double population_diversity(const Population& pop) {
    const int n = pop.size();
    if (n < 2)
        throw std::invalid_argument("diversity undefined for population of size < 2");
    std::int64_t sum = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            sum += edge_distance(pop.members[i], pop.members[j]);
    // Each unordered pair contributes twice to the ordered-pair sum.
    return 2.0 * static_cast<double>(sum) / (static_cast<double>(n) * (n - 1));
}

double population_diversity_sampled(const Population& pop, int pair_cap, Rng& rng) {
    const int n = pop.size();
    if (n < 2)
        throw std::invalid_argument("diversity undefined for population of size < 2");
    const std::int64_t total_pairs = static_cast<std::int64_t>(n) * (n - 1);
    if (total_pairs <= pair_cap)
        return population_diversity(pop);
    std::int64_t sum = 0;
    for (int s = 0; s < pair_cap; ++s) {
        const int i = rng.uniform_int(0, n - 1);
        int j = rng.uniform_int(0, n - 2);
        if (j >= i)
            ++j;
        sum += edge_distance(pop.members[i], pop.members[j]);
    }
    return static_cast<double>(sum) / pair_cap;
}

} // namespace tsplab
