#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "een/error.hpp"
#include "een/network.hpp"

namespace een {

struct RankEntry {
    int rank = 0;
    Rational word;
    std::int64_t frequency = 0;

    bool operator==(const RankEntry&) const = default;
};

/// Word frequencies sorted by frequency descending, ties by word ascending.
struct RankTable {
    std::vector<RankEntry> entries;

    std::size_t size() const { return entries.size(); }
    std::int64_t total() const;
    std::vector<double> frequencies() const;
    bool operator==(const RankTable&) const = default;
};

struct ZipfFit {
    double a = 0.0;
    double b = 0.0;
    double r2 = 0.0;
    int n_points = 0;
};

RankTable rank_table(const WordMap& wm);

/// Builds a table from arbitrary (word, count) pairs; duplicate words are merged.
RankTable rank_table_from_counts(std::span<const std::pair<Rational, std::int64_t>> counts);

/// Ordinary least squares of y on x. Returns (intercept, slope, r2); r2 is 1
/// when y has no variance.
template <typename DerivedX, typename DerivedY>
Eigen::Vector3<typename DerivedX::Scalar> linear_regression(const Eigen::MatrixBase<DerivedX>& x,
                                                            const Eigen::MatrixBase<DerivedY>& y) {
    using Scalar = typename DerivedX::Scalar;
    const Eigen::Index n = x.size();
    const Scalar mx = x.mean();
    const Scalar my = y.mean();
    const auto dx = (x.array() - mx).matrix().eval();
    const auto dy = (y.array() - my).matrix().eval();
    const Scalar sxx = dx.squaredNorm();
    const Scalar sxy = dx.dot(dy);
    const Scalar syy = dy.squaredNorm();
    const Scalar slope = sxx > Scalar(0) ? sxy / sxx : Scalar(0);
    const Scalar intercept = my - slope * mx;
    Scalar r2 = Scalar(1);
    if (syy > Scalar(0) && n > 0) {
        const Scalar ss_res = (dy - slope * dx).squaredNorm();
        r2 = Scalar(1) - ss_res / syy;
        r2 = std::clamp(r2, Scalar(0), Scalar(1));
    }
    return {intercept, slope, r2};
}

/// Fits f = a / r^b in base-10 log-log space over ranks > drop_top.
/// `frequencies` lists the frequency of rank 1, 2, ... in order.
ZipfFit zipf_fit(std::span<const double> frequencies, int drop_top = 1);
ZipfFit zipf_fit(const RankTable& rt, int drop_top = 1);

enum class ScanOrder { ScaleMajor, TimeMajor };

/// Raster scan of the word map. Inactive cells are nullopt and only appear
/// when include_inactive is set.
std::vector<std::optional<Rational>> sequence_1d(const WordMap& wm, bool include_inactive = false,
                                                 ScanOrder order = ScanOrder::ScaleMajor);

/// Dense n_scales x n_frames word image. A zero denominator marks an inactive cell.
struct DenseWordGrid {
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> num;
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> den;
    WeightConfig weights;

    Eigen::Index rows() const { return num.rows(); }
    Eigen::Index cols() const { return num.cols(); }
    bool active(Eigen::Index s, Eigen::Index t) const { return den(s, t) != 0; }
    std::optional<Rational> at(Eigen::Index s, Eigen::Index t) const;
    /// cc values as doubles with NaN for inactive cells.
    Eigen::MatrixXd values() const;
};

DenseWordGrid word_grid_2d(const WordMap& wm);
WordMap sparse_from_dense(const DenseWordGrid& dense);

/// Simplest fraction p/q (smallest q) in the closed interval [x - tol, x + tol],
/// restricted to [0, 1]. Exact recovery is guaranteed when the true
/// denominator q satisfies 2 * tol < 1 / q^2.
Rational simplest_rational(double x, double tol);

}  // namespace een
