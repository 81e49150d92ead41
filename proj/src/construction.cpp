#include "tsplab/construction.hpp"

#include <cassert>
#include <limits>

#include "tsplab/rng.hpp"

namespace tsplab {

Tour greedy_complete_path(const Instance& instance, const std::vector<int>& partial,
                          const RclParams& params, Rng& rng, ConstructionLog* step_log) {
    const int m = instance.num_cities();
    assert(!partial.empty());
    assert(params.sigma >= 0.0);

    std::vector<int> order;
    order.reserve(m);
    std::vector<bool> visited(m, false);
    for (int city : partial) {
        assert(city >= 0 && city < m);
        assert(!visited[city] && "partial path contains duplicates");
        visited[city] = true;
        order.push_back(city);
    }

    std::vector<int> remaining;
    remaining.reserve(m - order.size());
    for (int city = 0; city < m; ++city)
        if (!visited[city])
            remaining.push_back(city);

    std::vector<int> rcl;
    while (!remaining.empty()) {
        const int last = order.back();
        int best = std::numeric_limits<int>::max();
        for (int city : remaining)
            best = std::min(best, instance.distance(last, city));

        const double threshold = (1.0 + params.sigma) * best;
        rcl.clear();
        for (std::size_t idx = 0; idx < remaining.size(); ++idx)
            if (instance.distance(last, remaining[idx]) <= threshold)
                rcl.push_back(static_cast<int>(idx));

        const int pick = rcl[rng.next_below(rcl.size())];
        const int chosen = remaining[pick];
        if (step_log)
            step_log->emplace_back(instance.distance(last, chosen), best);
        order.push_back(chosen);
        remaining[pick] = remaining.back();
        remaining.pop_back();
    }

    return make_tour(instance, std::move(order));
}

Tour greedy_randomized_tour(const Instance& instance, const RclParams& params, Rng& rng,
                            ConstructionLog* step_log) {
    const int start = rng.uniform_int(0, instance.num_cities() - 1);
    return greedy_complete_path(instance, {start}, params, rng, step_log);
}

} // namespace tsplab
