#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "een/error.hpp"
#include "een/network.hpp"

namespace een {

/// Shannon entropy -sum p log p with 0 log 0 = 0, in units of log base `base`
/// (natural log by default). Probabilities must sum to 1 within 1e-9.
template <typename Derived>
typename Derived::Scalar shannon_entropy(const Eigen::MatrixBase<Derived>& probs,
                                         typename Derived::Scalar base = std::exp(typename Derived::Scalar(1))) {
    using Scalar = typename Derived::Scalar;
    require(probs.size() > 0, ErrorCode::NotNormalized, "empty probability vector");
    require(probs.allFinite() && (probs.array() >= Scalar(0)).all(), ErrorCode::NotNormalized,
            "probabilities must be finite and non-negative");
    require(std::abs(probs.sum() - Scalar(1)) <= Scalar(1e-9), ErrorCode::NotNormalized,
            "probabilities do not sum to 1");
    require(base > Scalar(0) && base != Scalar(1), ErrorCode::InvalidArgument, "invalid logarithm base");
    Scalar h = 0;
    for (Eigen::Index i = 0; i < probs.size(); ++i) {
        const Scalar p = probs(i);
        if (p > Scalar(0)) h -= p * std::log(p);
    }
    return h / std::log(base);
}

/// Population skewness g1 = m3 / m2^(3/2).
template <typename Derived>
typename Derived::Scalar skewness(const Eigen::MatrixBase<Derived>& x) {
    using Scalar = typename Derived::Scalar;
    require(x.size() >= 3, ErrorCode::DegenerateSample, "skewness needs at least 3 samples");
    const Scalar mean = x.mean();
    const auto d = (x.array() - mean).eval();
    const Scalar m2 = d.square().mean();
    const Scalar m3 = d.cube().mean();
    require(m2 > Scalar(0), ErrorCode::DegenerateSample, "sample variance is zero");
    return m3 / std::pow(m2, Scalar(1.5));
}

struct ScorePoint {
    double x = 0.0;
    double y = 0.0;
    double score = 0.0;
};

enum class DensityThreshold {
    GlobalMean,    // link when the distance is below the mean of all pairwise distances
    PerPointMean,  // link when the distance is below both endpoints' mean distance to the others
};

/// Graph density 2L / (N (N - 1)) of the distance-threshold graph over the points.
double point_density(std::span<const ScorePoint> points,
                     DensityThreshold rule = DensityThreshold::GlobalMean);

/// Min-max normalized scores binned into [k/10, (k+1)/10), last bin closed.
/// When every score is equal all mass goes to the top bin.
std::array<double, 10> decile_proportions(std::span<const ScorePoint> points);

/// Removes exactly floor(loss_rate * N) words chosen uniformly without
/// replacement: a partial Fisher-Yates shuffle, driven by mt19937_64(seed),
/// over the words sorted by (scale, time).
WordMap random_deletion(const WordMap& wm, double loss_rate, std::uint64_t seed);

struct TTestResult {
    double t = 0.0;
    double df = 0.0;
    double p = 1.0;
};

/// Welch's unequal-variance t-test with a two-sided p-value.
TTestResult welch_t_test(std::span<const double> a, std::span<const double> b);

/// Regularized incomplete beta I_x(a, b), evaluated with Lentz's continued fraction.
double incomplete_beta(double a, double b, double x);

/// Two-sided tail probability P(|T| >= |t|) of Student's t with df degrees of freedom.
double student_t_two_sided(double t, double df);

}  // namespace een
