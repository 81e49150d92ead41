#include "tsplab/local_search.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace tsplab {

NeighborLists build_neighbor_lists(const Instance& instance, int k) {
    const int m = instance.num_cities();
    assert(k >= 1 && k < m);
    std::vector<int> flat(static_cast<std::size_t>(m) * k);
    std::vector<int> others(m - 1);
    for (int city = 0; city < m; ++city) {
        int w = 0;
        for (int other = 0; other < m; ++other)
            if (other != city)
                others[w++] = other;
        std::partial_sort(others.begin(), others.begin() + k, others.end(), [&](int a, int b) {
            const int da = instance.distance(city, a);
            const int db = instance.distance(city, b);
            if (da != db)
                return da < db;
            return a < b;
        });
        std::copy(others.begin(), others.begin() + k,
                  flat.begin() + static_cast<std::size_t>(city) * k);
    }
    return NeighborLists(k, std::move(flat));
}

namespace {

class TwoOptSearch {
  public:
    TwoOptSearch(const Instance& instance, const Tour& t, const NeighborLists& nl,
                 const LocalSearchOptions& options)
        : inst_(instance), nl_(nl), options_(options), m_(instance.num_cities()),
          order_(t.order), pos_(m_), cost_(t.cost), queued_(m_, true), queue_(m_) {
        for (int i = 0; i < m_; ++i)
            pos_[order_[i]] = i;
        std::iota(queue_.begin(), queue_.end(), 0);
    }

    Tour run() {
        // Don't-look bits cover most of the work, but waking only the four
        // endpoints of a reversal can leave a sleeping city with a newly
        // improving move. A clean full sweep certifies local optimality.
        while (true) {
            drain_queue();
            bool any = false;
            for (int city = 0; city < m_; ++city)
                any |= improve_from(city);
            if (!any)
                break;
        }
        Tour result;
        result.order = std::move(order_);
        result.cost = cost_;
        assert(result.cost == tour_cost(inst_, result.order));
        return result;
    }

  private:
    void drain_queue() {
        std::size_t head = 0;
        while (head < queue_.size()) {
            const int city = queue_[head++];
            queued_[city] = false;
            if (improve_from(city) && head > 4096) {
                queue_.erase(queue_.begin(), queue_.begin() + head);
                head = 0;
            }
        }
        queue_.clear();
    }

    int next(int city) const { return order_[(pos_[city] + 1) % m_]; }
    int prev(int city) const { return order_[(pos_[city] + m_ - 1) % m_]; }

    void wake(int city) {
        if (!queued_[city]) {
            queued_[city] = true;
            queue_.push_back(city);
        }
    }

    // Reverse the cyclic position segment [from..to], flipping to the
    // complementary segment when that side is shorter.
    void reverse_segment(int from, int to) {
        int len = (to - from + m_) % m_ + 1;
        if (len > m_ - len) {
            const int new_from = (to + 1) % m_;
            const int new_to = (from + m_ - 1) % m_;
            from = new_from;
            to = new_to;
            len = m_ - len;
        }
        for (int s = 0; s < len / 2; ++s) {
            const int i = (from + s) % m_;
            const int j = (to - s + m_) % m_;
            std::swap(order_[i], order_[j]);
            pos_[order_[i]] = i;
            pos_[order_[j]] = j;
        }
    }

    // 2-opt move removing edges (a, next(a)) and (c, next(c)).
    void apply_two_opt(int a, int c) { reverse_segment((pos_[a] + 1) % m_, pos_[c]); }

    bool improve_from(int a) {
        // Successor side: replace edge (a, next(a)).
        {
            const int a_next = next(a);
            const int radius = inst_.distance(a, a_next);
            for (int c : nl_.of(a)) {
                const int d_ac = inst_.distance(a, c);
                if (d_ac >= radius)
                    break;
                if (c == a_next)
                    continue;
                const int c_next = next(c);
                const std::int64_t gain = static_cast<std::int64_t>(radius) +
                                          inst_.distance(c, c_next) - d_ac -
                                          inst_.distance(a_next, c_next);
                if (gain > 0) {
                    apply_two_opt(a, c);
                    cost_ -= gain;
                    wake(a);
                    wake(a_next);
                    wake(c);
                    wake(c_next);
                    return true;
                }
            }
        }
        // Predecessor side: replace edge (prev(a), a).
        {
            const int a_prev = prev(a);
            const int radius = inst_.distance(a_prev, a);
            for (int c : nl_.of(a)) {
                const int d_ac = inst_.distance(a, c);
                if (d_ac >= radius)
                    break;
                if (c == a_prev)
                    continue;
                const int c_prev = prev(c);
                const std::int64_t gain = static_cast<std::int64_t>(radius) +
                                          inst_.distance(c_prev, c) - d_ac -
                                          inst_.distance(a_prev, c_prev);
                if (gain > 0) {
                    apply_two_opt(a_prev, c_prev);
                    cost_ -= gain;
                    wake(a);
                    wake(a_prev);
                    wake(c);
                    wake(c_prev);
                    return true;
                }
            }
        }
        if (options_.or_opt && improve_or_opt(a))
            return true;
        return false;
    }

    // Relocate the length-1..3 segment starting at city a between a
    // candidate c and its successor, in either orientation.
    bool improve_or_opt(int a) {
        for (int len = 1; len <= 3 && len < m_ - 2; ++len) {
            const int p = pos_[a];
            const int q = (p + len - 1) % m_;
            const int seg_first = a;
            const int seg_last = order_[q];
            const int before = order_[(p + m_ - 1) % m_];
            const int after = order_[(q + 1) % m_];
            if (after == before)
                break; // segment covers all but one city
            const std::int64_t removal = static_cast<std::int64_t>(inst_.distance(before, seg_first)) +
                                         inst_.distance(seg_last, after) -
                                         inst_.distance(before, after);
            if (removal <= 0)
                continue;
            for (int c : nl_.of(seg_first)) {
                if (in_segment(c, p, len) || c == before)
                    continue;
                const int d = next(c);
                if (in_segment(d, p, len))
                    continue;
                const std::int64_t base = inst_.distance(c, d);
                const std::int64_t fwd = inst_.distance(c, seg_first) +
                                         inst_.distance(seg_last, d) - base;
                const std::int64_t rev = inst_.distance(c, seg_last) +
                                         inst_.distance(seg_first, d) - base;
                const bool reversed = rev < fwd;
                const std::int64_t gain = removal - (reversed ? rev : fwd);
                if (gain > 0) {
                    relocate(p, len, c, reversed);
                    cost_ -= gain;
                    for (int city : {seg_first, seg_last, before, after, c, d})
                        wake(city);
                    return true;
                }
            }
        }
        return false;
    }

    bool in_segment(int city, int seg_pos, int len) const {
        const int offset = (pos_[city] - seg_pos + m_) % m_;
        return offset < len;
    }

    void relocate(int seg_pos, int len, int dest_city, bool reversed) {
        std::vector<int> segment(len);
        for (int s = 0; s < len; ++s)
            segment[s] = order_[(seg_pos + s) % m_];
        if (reversed)
            std::reverse(segment.begin(), segment.end());
        std::vector<int> rebuilt;
        rebuilt.reserve(m_);
        for (int s = 0; s < m_ - len; ++s) {
            const int city = order_[(seg_pos + len + s) % m_];
            rebuilt.push_back(city);
            if (city == dest_city)
                for (int seg_city : segment)
                    rebuilt.push_back(seg_city);
        }
        order_ = std::move(rebuilt);
        for (int i = 0; i < m_; ++i)
            pos_[order_[i]] = i;
    }

    const Instance& inst_;
    const NeighborLists& nl_;
    const LocalSearchOptions options_;
    const int m_;
    std::vector<int> order_;
    std::vector<int> pos_;
    std::int64_t cost_;
    std::vector<bool> queued_;
    std::vector<int> queue_;
};

} // namespace

Tour two_opt(const Instance& instance, const Tour& t, const NeighborLists& nl,
             const LocalSearchOptions& options) {
    TwoOptSearch search(instance, t, nl, options);
    return search.run();
}

} // namespace tsplab
