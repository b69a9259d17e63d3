#pragma once

// Exhaustive weight/threshold search.
//
// Every combination of the GridSpec is scored by the Zipf R^2 of its
// clustering-coefficient vocabulary (rank 1 removed). Among combinations with
// R^2 > 0.8 the one with the most distinct words wins; ties go to the higher
// R^2, then to the earlier enumeration index.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "een/ingest.hpp"
#include "een/network.hpp"
#include "een/words.hpp"

namespace een {

inline constexpr double kQualifyingR2 = 0.8;

enum class ThetaMode {
    Absolute,    // theta values are used as given
    Percentile,  // theta values are percentiles (0..100) of candidate-pair information
};

struct GridSpec {
    std::vector<double> values_w1;
    std::vector<double> values_w2;
    std::vector<double> values_w3;
    std::vector<double> values_w4;
    std::vector<double> values_theta;
    ThetaMode theta_mode = ThetaMode::Percentile;
    NeighborhoodSpec neighborhood;

    /// w1..w4 in {1..8}, theta at the 10th..90th percentiles, windowed neighbourhood.
    static GridSpec desk_default();

    void validate() const;
    std::size_t weight_count() const;
    std::size_t combination_count() const;
    /// Weight vector number `index` in enumeration order (theta left at 0).
    WeightConfig weights_at(std::size_t index) const;
};

struct EvalResult {
    WeightConfig config;
    double r2 = 0.0;
    double zipf_a = 0.0;
    double zipf_b = 0.0;
    std::int64_t word_types = 0;
    bool qualifies = false;

    bool operator==(const EvalResult&) const = default;
};

/// Cartesian product, w1 slowest and theta fastest. In percentile mode the
/// theta field holds the percentile, not an absolute threshold.
std::vector<WeightConfig> enumerate_grid(const GridSpec& spec);

/// Scores a rank table under the two selection criteria.
EvalResult assess(const WeightConfig& config, const RankTable& rt);

/// build_network -> clustering_coefficients -> rank_table -> zipf_fit(drop_top = 1).
EvalResult evaluate_config(const ScaleTimeGrid& grid, const WeightConfig& w, const NeighborhoodSpec& nb);

/// Linear-interpolation percentile (0..100) of the information values of all
/// candidate pairs under weights `w`. Returns 0 when the grid has no candidate pair.
double information_percentile(const ScaleTimeGrid& grid, const WeightConfig& w, const NeighborhoodSpec& nb,
                              double percentile);

/// Candidate pairs of a grid grouped by their (dscale, dtime, dvolume, vsum)
/// signature, with per-node adjacency windows for fast clustering.
class PreparedGrid {
public:
    PreparedGrid(const ScaleTimeGrid& grid, const NeighborhoodSpec& nb);

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t pair_count() const { return pairs_.size(); }

    /// Absolute thresholds for percentile values, under weights w.
    std::vector<double> percentile_thresholds(const WeightConfig& w, std::span<const double> percentiles) const;

    /// Evaluates `w` at every threshold (ascending) in one incremental pass.
    std::vector<EvalResult> evaluate(const WeightConfig& w, std::span<const double> thetas) const;

    /// Word map for one configuration (same result as the reference pipeline).
    WordMap word_map(const WeightConfig& w) const;

private:
    struct PairClass {
        int dscale;
        int dtime;
        int dvolume;
        int vsum;
        std::uint32_t begin;
        std::uint32_t end;
    };
    struct Workspace;

    template <typename Snapshot>
    void sweep(const WeightConfig& w, std::span<const double> thetas, Workspace& ws, Snapshot&& snapshot) const;

    const ScaleTimeGrid* grid_;
    std::vector<Pixel> nodes_;               // time-major order
    std::vector<std::uint32_t> grid_index_;  // node -> index in grid.pixels()
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_;
    std::vector<PairClass> classes_;
    std::vector<std::uint32_t> row_first_word_;
    std::vector<std::uint32_t> row_offset_;  // prefix sums of row widths, size n + 1
};

struct SearchOutcome {
    std::vector<EvalResult> results;  // enumeration order, absolute thetas
    std::optional<std::size_t> winner;

    const EvalResult& best() const;  // throws NoQualifyingCombo
};

/// Runs the full search. `jobs` = 0 uses the hardware concurrency; the result
/// is identical for every value of `jobs`.
SearchOutcome self_organize(const ScaleTimeGrid& grid, const GridSpec& spec, unsigned jobs = 1);

/// Index of the winner among `results` under the selection rule.
std::optional<std::size_t> select_winner(std::span<const EvalResult> results);

}  // namespace een
