#pragma once

/// @file tsplib.hpp
/// @brief TSPLIB EUC_2D instance parsing and integer distance lookup.

#include <cassert>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tsplab {

/// A symmetric Euclidean TSP instance. Immutable after construction and
/// safe to share across concurrent runs.
///
/// Distances follow the TSPLIB EUC_2D convention: Euclidean distance
/// rounded to the nearest integer. For instances up to
/// `kDistanceMatrixMaxCities` cities the full matrix is precomputed so the
/// hot loops get O(1) lookups; larger instances compute on demand.
class Instance {
  public:
    static constexpr int kDistanceMatrixMaxCities = 2000;

    /// Build an instance from coordinates. Throws ParseError if fewer than
    /// 3 cities are given.
    static Instance from_coords(std::string name, std::vector<std::pair<double, double>> coords,
                                std::optional<std::int64_t> optimum = std::nullopt);

    const std::string& name() const noexcept { return name_; }
    int num_cities() const noexcept { return m_; }
    const std::vector<std::pair<double, double>>& coords() const noexcept { return coords_; }
    std::optional<std::int64_t> optimum() const noexcept { return optimum_; }

    /// EUC_2D distance between cities i and j.
    int distance(int i, int j) const {
        assert(i >= 0 && i < m_ && j >= 0 && j < m_);
        if (!matrix_.empty())
            return matrix_[static_cast<std::size_t>(i) * m_ + j];
        return euclidean_rounded(i, j);
    }

    bool has_distance_matrix() const noexcept { return !matrix_.empty(); }

  private:
    Instance() = default;

    int euclidean_rounded(int i, int j) const {
        const double dx = coords_[i].first - coords_[j].first;
        const double dy = coords_[i].second - coords_[j].second;
        return static_cast<int>(std::sqrt(dx * dx + dy * dy) + 0.5);
    }

    std::string name_;
    int m_ = 0;
    std::vector<std::pair<double, double>> coords_;
    std::vector<int> matrix_; // row-major, empty when m > kDistanceMatrixMaxCities
    std::optional<std::int64_t> optimum_;
};

/// Parse the full contents of a TSPLIB .tsp file.
///
/// Requires NAME, DIMENSION, EDGE_WEIGHT_TYPE: EUC_2D and a
/// NODE_COORD_SECTION with DIMENSION entries. Any other edge weight type
/// is rejected with an "unsupported format" ParseError naming the type.
/// The known optimum, when the instance name is in the bundled table, is
/// attached for gap reporting.
Instance parse_instance(const std::string& text);

/// Read and parse a .tsp file from disk.
Instance load_instance(const std::string& path);

/// Known optimal tour costs keyed by instance name. The bundled defaults
/// cover the classic TSPLIB instances shipped under data/.
class OptimaTable {
  public:
    /// Table with the bundled defaults.
    static const OptimaTable& bundled();

    /// Parse a "name,optimum" per-line text table, merged over the
    /// bundled defaults.
    static OptimaTable load(const std::string& path);

    std::optional<std::int64_t> lookup(std::string_view name) const;

  private:
    std::unordered_map<std::string, std::int64_t> entries_;
};

/// Convenience lookup into the bundled table.
std::optional<std::int64_t> known_optimum(std::string_view name);

} // namespace tsplab
