#include "tsplab/genetic_ops.hpp"

#include <cassert>
#include <stdexcept>

#include "tsplab/rng.hpp"

namespace tsplab {

Tour ox_crossover_at(const Instance& instance, const Tour& p1, const Tour& p2, int i, int j) {
    const int m = instance.num_cities();
    assert(0 <= i && i < j && j < m);
    assert(is_permutation(p1.order, m) && is_permutation(p2.order, m));

    static thread_local std::vector<int> child;
    static thread_local std::vector<bool> in_segment;
    child.assign(m, -1);
    in_segment.assign(m, false);

    for (int pos = i; pos <= j; ++pos) {
        child[pos] = p1.order[pos];
        in_segment[p1.order[pos]] = true;
    }

    int fill = (j + 1) % m;
    for (int step = 0; step < m; ++step) {
        const int city = p2.order[(j + 1 + step) % m];
        if (in_segment[city])
            continue;
        child[fill] = city;
        fill = (fill + 1) % m;
    }

    return make_tour(instance, std::vector<int>(child));
}

Tour ox_crossover(const Instance& instance, const Tour& p1, const Tour& p2, Rng& rng) {
    const int m = instance.num_cities();
    // i < j strictly: draw an unordered pair of distinct positions.
    int i = rng.uniform_int(0, m - 1);
    int j = rng.uniform_int(0, m - 2);
    if (j >= i)
        ++j;
    if (i > j)
        std::swap(i, j);
    return ox_crossover_at(instance, p1, p2, i, j);
}

Tour exchange_mutation_at(const Instance& instance, const Tour& t, int pos1, int pos2) {
    const int m = instance.num_cities();
    assert(pos1 != pos2 && pos1 >= 0 && pos1 < m && pos2 >= 0 && pos2 < m);

    Tour result = t;
    std::swap(result.order[pos1], result.order[pos2]);

    // Incremental cost: only edges incident to the two positions change.
    auto edge_sum_at = [&](const std::vector<int>& order, int pos) {
        const int prev = order[(pos + m - 1) % m];
        const int next = order[(pos + 1) % m];
        return static_cast<std::int64_t>(instance.distance(prev, order[pos])) +
               instance.distance(order[pos], next);
    };
    const bool adjacent = (pos2 - pos1 + m) % m == 1 || (pos1 - pos2 + m) % m == 1;
    if (adjacent) {
        // The swapped pair shares an edge; recompute the 3-edge window once.
        const int lead = (pos2 - pos1 + m) % m == 1 ? pos1 : pos2;
        auto window = [&](const std::vector<int>& order) {
            const int a = order[(lead + m - 1) % m];
            const int b = order[lead];
            const int c = order[(lead + 1) % m];
            const int d = order[(lead + 2) % m];
            return static_cast<std::int64_t>(instance.distance(a, b)) + instance.distance(b, c) +
                   instance.distance(c, d);
        };
        result.cost = t.cost - window(t.order) + window(result.order);
    } else {
        result.cost = t.cost - edge_sum_at(t.order, pos1) - edge_sum_at(t.order, pos2) +
                      edge_sum_at(result.order, pos1) + edge_sum_at(result.order, pos2);
    }
    assert(result.cost == tour_cost(instance, result.order));
    return result;
}

Tour exchange_mutation(const Instance& instance, const Tour& t, Rng& rng) {
    const int m = instance.num_cities();
    const int pos1 = rng.uniform_int(0, m - 1);
    int pos2 = rng.uniform_int(0, m - 2);
    if (pos2 >= pos1)
        ++pos2;
    return exchange_mutation_at(instance, t, pos1, pos2);
}

int binary_tournament(const Population& pop, Rng& rng) {
    const int n = pop.size();
    assert(n >= 1);
    const int a = rng.uniform_int(0, n - 1);
    const int b = rng.uniform_int(0, n - 1);
    return pop.members[b].cost < pop.members[a].cost ? b : a;
}

std::vector<std::pair<int, int>> randomized_adjacent_pairs(const Population& pop, Rng& rng) {
    const int n = pop.size();
    if (n < 2)
        throw std::invalid_argument("adjacent selection requires a population of at least 2");
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i)
        perm[i] = i;
    rng.shuffle(perm);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(n);
    for (int i = 0; i < n; ++i)
        pairs.emplace_back(perm[i], perm[(i + 1) % n]);
    return pairs;
}

const Tour& compete(const Tour& parent, const Tour& child) {
    return child.cost < parent.cost ? child : parent;
}

void apply_elitism(Population& pop, const Tour& old_best, bool old_best_improved) {
    assert(pop.size() >= 1);
    int worst = 0;
    for (int i = 1; i < pop.size(); ++i)
        if (pop.members[i].cost >= pop.members[worst].cost)
            worst = i;
    pop.members[worst] = old_best;
    if (!pop.improved.empty())
        pop.improved[worst] = old_best_improved;
}

} // namespace tsplab
