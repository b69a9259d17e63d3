#include "een/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "een/rng.hpp"

namespace een {
namespace {

// Distances within this relative margin of the threshold count as equal to it,
// so equidistant configurations do not link through rounding noise.
constexpr double kDistanceTolerance = 1e-9;

void check_points(std::span<const ScorePoint> points) {
    for (const auto& p : points)
        require(std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.score), ErrorCode::InvalidArgument,
                "score points must be finite");
}

double distance(const ScorePoint& a, const ScorePoint& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

bool below(double d, double threshold) {
    return d < threshold * (1.0 - kDistanceTolerance);
}

double sample_variance(std::span<const double> x, double mean) {
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    return ss / static_cast<double>(x.size() - 1);
}

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
    constexpr int kMaxIterations = 10000;
    constexpr double kEps = 1e-16;
    constexpr double kTiny = 1e-300;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIterations; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kEps) return h;
    }
    return h;
}

}  // namespace

double point_density(std::span<const ScorePoint> points, DensityThreshold rule) {
    const std::size_t n = points.size();
    require(n >= 2, ErrorCode::TooFewPoints, "density needs at least 2 points");
    check_points(points);

    auto dist = [&](std::size_t i, std::size_t j) { return distance(points[i], points[j]); };
    std::uint64_t links = 0;
    if (rule == DensityThreshold::GlobalMean) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) sum += dist(i, j);
        const double mean = sum / (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) links += below(dist(i, j), mean) ? 1 : 0;
    } else {
        std::vector<double> mean(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double d = dist(i, j);
                mean[i] += d;
                mean[j] += d;
            }
        for (double& m : mean) m /= static_cast<double>(n - 1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double d = dist(i, j);
                links += below(d, mean[i]) && below(d, mean[j]) ? 1 : 0;
            }
    }
    return 2.0 * static_cast<double>(links) / (static_cast<double>(n) * static_cast<double>(n - 1));
}

std::array<double, 10> decile_proportions(std::span<const ScorePoint> points) {
    require(!points.empty(), ErrorCode::EmptySet, "no score points");
    check_points(points);
    std::array<double, 10> out{};
    const auto [lo_it, hi_it] = std::minmax_element(points.begin(), points.end(), [](const auto& a, const auto& b) {
        return a.score < b.score;
    });
    const double lo = lo_it->score;
    const double hi = hi_it->score;
    const double share = 1.0 / static_cast<double>(points.size());
    if (!(hi > lo)) {
        out[9] = 1.0;
        return out;
    }
    for (const auto& p : points) {
        const double u = (p.score - lo) / (hi - lo);
        const auto bin = std::min<std::size_t>(9, static_cast<std::size_t>(std::floor(u * 10.0)));
        out[bin] += share;
    }
    return out;
}

WordMap random_deletion(const WordMap& wm, double loss_rate, std::uint64_t seed) {
    require(std::isfinite(loss_rate) && loss_rate >= 0.0 && loss_rate <= 1.0, ErrorCode::InvalidArgument,
            "loss rate must lie in [0, 1]");
    WordMap sorted = wm;
    sorted.sort();
    const std::size_t n = sorted.words.size();
    const auto remove = static_cast<std::size_t>(std::floor(loss_rate * static_cast<double>(n)));

    std::vector<std::size_t> index(n);
    std::iota(index.begin(), index.end(), std::size_t{0});
    Rng rng(seed);
    for (std::size_t k = 0; k < remove; ++k) {
        const std::size_t i = n - 1 - k;
        const auto j = static_cast<std::size_t>(uniform_below(rng, i + 1));
        std::swap(index[i], index[j]);
    }
    std::vector<bool> removed(n, false);
    for (std::size_t k = 0; k < remove; ++k) removed[index[n - 1 - k]] = true;

    WordMap out = sorted;
    out.words.clear();
    for (std::size_t i = 0; i < n; ++i)
        if (!removed[i]) out.words.push_back(sorted.words[i]);
    return out;
}

double incomplete_beta(double a, double b, double x) {
    require(a > 0.0 && b > 0.0, ErrorCode::InvalidArgument, "beta parameters must be positive");
    require(x >= 0.0 && x <= 1.0, ErrorCode::InvalidArgument, "x must lie in [0, 1]");
    if (x == 0.0 || x == 1.0) return x;
    const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
                             b * std::log1p(-x);
    const double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_continued_fraction(a, b, x) / a;
    return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_two_sided(double t, double df) {
    require(df > 0.0, ErrorCode::InvalidArgument, "degrees of freedom must be positive");
    if (!std::isfinite(t)) return 0.0;
    return incomplete_beta(df / 2.0, 0.5, df / (df + t * t));
}

TTestResult welch_t_test(std::span<const double> a, std::span<const double> b) {
    require(a.size() >= 2 && b.size() >= 2, ErrorCode::DegenerateSample, "each sample needs n >= 2");
    for (double v : a) require(std::isfinite(v), ErrorCode::DegenerateSample, "non-finite sample");
    for (double v : b) require(std::isfinite(v), ErrorCode::DegenerateSample, "non-finite sample");
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    const double ma = std::accumulate(a.begin(), a.end(), 0.0) / na;
    const double mb = std::accumulate(b.begin(), b.end(), 0.0) / nb;
    const double qa = sample_variance(a, ma) / na;
    const double qb = sample_variance(b, mb) / nb;
    const double se2 = qa + qb;
    require(se2 > 0.0, ErrorCode::DegenerateSample, "both samples have zero variance");

    TTestResult r;
    r.t = (ma - mb) / std::sqrt(se2);
    r.df = se2 * se2 / (qa * qa / (na - 1.0) + qb * qb / (nb - 1.0));
    r.p = student_t_two_sided(r.t, r.df);
    return r;
}

}  // namespace een
