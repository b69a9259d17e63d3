#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "een/ingest.hpp"

namespace een {

struct WeightConfig {
    double w1 = 1.0;  // scale difference
    double w2 = 1.0;  // time difference
    double w3 = 1.0;  // volume difference
    double w4 = 1.0;  // volume sum
    double theta = 1.0;

    void validate() const;
    bool operator==(const WeightConfig&) const = default;
};

enum class NeighborhoodMode { Windowed, Global };

struct NeighborhoodSpec {
    NeighborhoodMode mode = NeighborhoodMode::Windowed;
    int r_scale = 12;
    int r_time = 10;

    void validate() const;
    bool is_candidate(const Pixel& p, const Pixel& q) const;
    bool operator==(const NeighborhoodSpec&) const = default;
};

/// Pairwise information between two pixels: a weighted L1 change in scale,
/// time and volume plus a weighted volume-sum (energy) term.
inline double information(const Pixel& p, const Pixel& q, const WeightConfig& w) {
    auto absdiff = [](int a, int b) { return static_cast<double>(a > b ? a - b : b - a); };
    return w.w1 * absdiff(p.scale, q.scale) + w.w2 * absdiff(p.time, q.time) +
           w.w3 * absdiff(p.volume, q.volume) + w.w4 * std::abs(static_cast<double>(p.volume + q.volume));
}

/// Exact non-negative rational in lowest terms with a positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t num, std::int64_t den);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __extension__ using Wide = __int128;
        const Wide lhs = static_cast<Wide>(a.num) * b.den;
        const Wide rhs = static_cast<Wide>(b.num) * a.den;
        return lhs <=> rhs;
    }
};

/// Undirected simple graph over the active pixels of a grid.
/// Node i corresponds to grid.pixels()[i]; edges are stored with first < second.
struct EenNetwork {
    std::vector<Pixel> nodes;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    int n_scales = 0;
    int n_frames = 0;
    WeightConfig weights;

    std::vector<std::uint32_t> degrees() const;
};

EenNetwork build_network(const ScaleTimeGrid& grid, const WeightConfig& w, const NeighborhoodSpec& nb);

struct Word {
    int scale = 0;
    int time = 0;
    Rational cc;

    bool operator==(const Word&) const = default;
};

/// Per-pixel clustering coefficients, sorted by (scale, time).
struct WordMap {
    std::vector<Word> words;
    int n_scales = 0;
    int n_frames = 0;
    WeightConfig weights;

    std::size_t size() const { return words.size(); }
    bool empty() const { return words.empty(); }
    void sort();
    bool operator==(const WordMap&) const = default;
};

/// Local (Watts-Strogatz) clustering coefficient of every node:
/// 2 * links-among-neighbours / (degree * (degree - 1)), or 0 when degree < 2.
WordMap clustering_coefficients(const EenNetwork& net);

/// Word for a node with `degree` neighbours and `links` edges among them.
inline Rational clustering_word(std::uint64_t links, std::uint64_t degree) {
    if (degree < 2) return {0, 1};
    return Rational::make(static_cast<std::int64_t>(2 * links),
                          static_cast<std::int64_t>(degree * (degree - 1)));
}

}  // namespace een
