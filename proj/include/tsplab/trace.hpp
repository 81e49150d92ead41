#pragma once

/// @file trace.hpp
/// @brief Time-stamped best-cost / diversity sampling for runs.

#include <cstdint>
#include <vector>

namespace tsplab {

struct TraceSample {
    double elapsed_s = 0.0;    // wall seconds, or generation count under
                               // generation/evaluation budgets
    std::int64_t best_cost = 0; // best-so-far at the window end
    double diversity = 0.0;     // mean population diversity in the window
};

struct RunTrace {
    std::vector<TraceSample> samples;
    bool diversity_subsampled = false;
    int diversity_pair_cap = 0;

    bool empty() const noexcept { return samples.empty(); }
};

struct TraceOptions {
    bool enabled = false;
    /// Aggregation window in the budget's time unit (seconds for
    /// wall-clock budgets, generations otherwise).
    double window = 0.01;
    /// Ordered-pair sample cap for the diversity sum on large instances.
    int diversity_pair_cap = 500;
};

/// Buckets per-generation (elapsed, best, diversity) observations into
/// fixed windows. A window's diversity is the mean of its observations;
/// windows without any observation repeat the previous value. Sample
/// timestamps are window end times, so they are strictly increasing.
class TraceRecorder {
  public:
    TraceRecorder() = default;
    TraceRecorder(bool enabled, double window) : enabled_(enabled), window_(window) {}

    bool enabled() const noexcept { return enabled_; }

    void record(double elapsed, std::int64_t best_cost, double diversity) {
        if (!enabled_)
            return;
        const std::int64_t window_index = static_cast<std::int64_t>(elapsed / window_);
        if (!have_window_) {
            current_window_ = window_index;
            have_window_ = true;
        }
        while (window_index > current_window_)
            flush_window();
        sum_ += diversity;
        ++count_;
        last_best_ = best_cost;
        last_diversity_ = diversity;
    }

    RunTrace finish() {
        if (enabled_ && have_window_ && count_ > 0)
            flush_window();
        return std::move(trace_);
    }

    void set_subsampled(int pair_cap) {
        trace_.diversity_subsampled = true;
        trace_.diversity_pair_cap = pair_cap;
    }

  private:
    void flush_window() {
        const double value = count_ > 0 ? sum_ / count_ : last_diversity_;
        trace_.samples.push_back(
            {static_cast<double>(current_window_ + 1) * window_, last_best_, value});
        last_diversity_ = value;
        sum_ = 0.0;
        count_ = 0;
        ++current_window_;
    }

    bool enabled_ = false;
    double window_ = 0.01;
    RunTrace trace_;
    bool have_window_ = false;
    std::int64_t current_window_ = 0;
    double sum_ = 0.0;
    int count_ = 0;
    std::int64_t last_best_ = 0;
    double last_diversity_ = 0.0;
};

} // namespace tsplab
