#include "een/words.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace een {

std::int64_t RankTable::total() const {
    std::int64_t sum = 0;
    for (const auto& e : entries) sum += e.frequency;
    return sum;
}

std::vector<double> RankTable::frequencies() const {
    std::vector<double> f;
    f.reserve(entries.size());
    for (const auto& e : entries) f.push_back(static_cast<double>(e.frequency));
    return f;
}

RankTable rank_table_from_counts(std::span<const std::pair<Rational, std::int64_t>> counts) {
    std::map<Rational, std::int64_t> merged;
    for (const auto& [word, count] : counts) {
        require(count > 0, ErrorCode::InvalidArgument, "word counts must be positive");
        merged[word] += count;
    }
    RankTable rt;
    rt.entries.reserve(merged.size());
    for (const auto& [word, count] : merged) rt.entries.push_back({0, word, count});
    // std::map already orders words ascending, so a stable sort keeps the tie-break.
    std::stable_sort(rt.entries.begin(), rt.entries.end(),
                     [](const RankEntry& a, const RankEntry& b) { return a.frequency > b.frequency; });
    for (std::size_t i = 0; i < rt.entries.size(); ++i) rt.entries[i].rank = static_cast<int>(i + 1);
    return rt;
}

RankTable rank_table(const WordMap& wm) {
    require(!wm.empty(), ErrorCode::EmptyWordMap, "word map is empty");
    std::vector<Rational> words;
    words.reserve(wm.size());
    for (const auto& w : wm.words) words.push_back(w.cc);
    std::sort(words.begin(), words.end());
    std::vector<std::pair<Rational, std::int64_t>> counts;
    for (std::size_t i = 0; i < words.size();) {
        std::size_t j = i;
        while (j < words.size() && words[j] == words[i]) ++j;
        counts.emplace_back(words[i], static_cast<std::int64_t>(j - i));
        i = j;
    }
    return rank_table_from_counts(counts);
}

ZipfFit zipf_fit(std::span<const double> frequencies, int drop_top) {
    require(drop_top >= 0, ErrorCode::InvalidArgument, "drop_top must be >= 0");
    const auto n = static_cast<std::ptrdiff_t>(frequencies.size()) - drop_top;
    require(n >= 2, ErrorCode::InsufficientData, "fewer than 2 ranks remain after dropping the top ranks");
    Eigen::VectorXd x(n), y(n);
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const double f = frequencies[static_cast<std::size_t>(i + drop_top)];
        require(std::isfinite(f) && f > 0.0, ErrorCode::InvalidArgument, "frequencies must be positive");
        x(i) = std::log10(static_cast<double>(i + drop_top + 1));
        y(i) = std::log10(f);
    }
    const Eigen::Vector3d fit = linear_regression(x, y);
    return {std::pow(10.0, fit(0)), -fit(1), fit(2), static_cast<int>(n)};
}

ZipfFit zipf_fit(const RankTable& rt, int drop_top) {
    const auto f = rt.frequencies();
    return zipf_fit(std::span<const double>(f), drop_top);
}

std::vector<std::optional<Rational>> sequence_1d(const WordMap& wm, bool include_inactive, ScanOrder order) {
    std::vector<Word> words = wm.words;
    if (order == ScanOrder::ScaleMajor) {
        std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) {
            return a.scale != b.scale ? a.scale < b.scale : a.time < b.time;
        });
    } else {
        std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) {
            return a.time != b.time ? a.time < b.time : a.scale < b.scale;
        });
    }

    std::vector<std::optional<Rational>> seq;
    if (!include_inactive) {
        seq.reserve(words.size());
        for (const auto& w : words) seq.emplace_back(w.cc);
        return seq;
    }

    const int outer = order == ScanOrder::ScaleMajor ? wm.n_scales : wm.n_frames;
    const int inner = order == ScanOrder::ScaleMajor ? wm.n_frames : wm.n_scales;
    seq.reserve(static_cast<std::size_t>(outer) * static_cast<std::size_t>(inner));
    std::size_t next = 0;
    for (int a = 0; a < outer; ++a) {
        for (int b = 0; b < inner; ++b) {
            const int s = order == ScanOrder::ScaleMajor ? a : b;
            const int t = order == ScanOrder::ScaleMajor ? b : a;
            if (next < words.size() && words[next].scale == s && words[next].time == t) {
                seq.emplace_back(words[next++].cc);
            } else {
                seq.emplace_back(std::nullopt);
            }
        }
    }
    require(next == words.size(), ErrorCode::InvalidArgument, "word outside the grid dimensions");
    return seq;
}

std::optional<Rational> DenseWordGrid::at(Eigen::Index s, Eigen::Index t) const {
    if (!active(s, t)) return std::nullopt;
    return Rational{num(s, t), den(s, t)};
}

Eigen::MatrixXd DenseWordGrid::values() const {
    Eigen::MatrixXd v(rows(), cols());
    for (Eigen::Index s = 0; s < rows(); ++s)
        for (Eigen::Index t = 0; t < cols(); ++t)
            v(s, t) = active(s, t) ? static_cast<double>(num(s, t)) / static_cast<double>(den(s, t))
                                   : std::numeric_limits<double>::quiet_NaN();
    return v;
}

DenseWordGrid word_grid_2d(const WordMap& wm) {
    DenseWordGrid dense;
    dense.weights = wm.weights;
    dense.num.setZero(wm.n_scales, wm.n_frames);
    dense.den.setZero(wm.n_scales, wm.n_frames);
    for (const auto& w : wm.words) {
        require(w.scale >= 0 && w.scale < wm.n_scales && w.time >= 0 && w.time < wm.n_frames,
                ErrorCode::InvalidArgument, "word outside the grid dimensions");
        dense.num(w.scale, w.time) = w.cc.num;
        dense.den(w.scale, w.time) = w.cc.den;
    }
    return dense;
}

WordMap sparse_from_dense(const DenseWordGrid& dense) {
    WordMap wm;
    wm.n_scales = static_cast<int>(dense.rows());
    wm.n_frames = static_cast<int>(dense.cols());
    wm.weights = dense.weights;
    for (Eigen::Index s = 0; s < dense.rows(); ++s)
        for (Eigen::Index t = 0; t < dense.cols(); ++t)
            if (dense.active(s, t))
                wm.words.push_back({static_cast<int>(s), static_cast<int>(t), Rational::make(dense.num(s, t), dense.den(s, t))});
    return wm;
}

namespace {

// Simplest fraction in [lo, hi] for 0 <= lo <= hi, by continued-fraction descent.
Rational simplest_between(double lo, double hi, int depth) {
    const double fl = std::floor(lo);
    if (fl == lo || depth > 40) return {static_cast<std::int64_t>(fl), 1};
    if (fl + 1.0 <= hi) return {static_cast<std::int64_t>(fl) + 1, 1};
    const Rational inner = simplest_between(1.0 / (hi - fl), 1.0 / (lo - fl), depth + 1);
    // fl + 1 / (inner.num / inner.den) = (fl * num + den) / num
    return {static_cast<std::int64_t>(fl) * inner.num + inner.den, inner.num};
}

}  // namespace

Rational simplest_rational(double x, double tol) {
    require(std::isfinite(x) && tol >= 0.0, ErrorCode::InvalidArgument, "invalid value for rational recovery");
    const double lo = std::clamp(x - tol, 0.0, 1.0);
    const double hi = std::clamp(x + tol, 0.0, 1.0);
    require(lo <= hi, ErrorCode::InvalidArgument, "value outside [0, 1]");
    const Rational r = simplest_between(lo, hi, 0);
    return Rational::make(r.num, r.den);
}

}  // namespace een
