#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "een/error.hpp"
#include "een/network.hpp"
#include "support.hpp"

using namespace een;
using namespace een::testing;

namespace {

using EdgeSet = std::set<std::pair<std::uint32_t, std::uint32_t>>;

EdgeSet brute_force_edges(const ScaleTimeGrid& g, const WeightConfig& w, const NeighborhoodSpec& nb) {
    EdgeSet out;
    const auto px = g.pixels();
    for (std::uint32_t i = 0; i < px.size(); ++i)
        for (std::uint32_t j = i + 1; j < px.size(); ++j) {
            const bool candidate = nb.mode == NeighborhoodMode::Global ||
                                   (std::abs(px[i].scale - px[j].scale) <= nb.r_scale &&
                                    std::abs(px[i].time - px[j].time) <= nb.r_time);
            if (candidate && information(px[i], px[j], w) < w.theta) out.insert({i, j});
        }
    return out;
}

EdgeSet edge_set(const EenNetwork& net) {
    return {net.edges.begin(), net.edges.end()};
}

// Network over pixels laid out on one scale row, with an explicit edge list.
EenNetwork graph(std::uint32_t n, const EdgeSet& edges) {
    EenNetwork net;
    for (std::uint32_t i = 0; i < n; ++i) net.nodes.push_back({0, static_cast<int>(i), 1});
    net.edges.assign(edges.begin(), edges.end());
    net.n_scales = 1;
    net.n_frames = static_cast<int>(n);
    return net;
}

// Counts neighbour pairs that are themselves linked.
Rational triangle_oracle(std::uint32_t node, std::uint32_t n, const EdgeSet& edges) {
    auto linked = [&](std::uint32_t a, std::uint32_t b) { return edges.count({std::min(a, b), std::max(a, b)}) > 0; };
    std::vector<std::uint32_t> nb;
    for (std::uint32_t j = 0; j < n; ++j)
        if (j != node && linked(node, j)) nb.push_back(j);
    const auto k = static_cast<std::int64_t>(nb.size());
    if (k < 2) return {0, 1};
    std::int64_t links = 0;
    for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b) links += linked(nb[a], nb[b]);
    return Rational::make(2 * links, k * (k - 1));
}

}  // namespace

TEST_CASE("information metric") {
    const WeightConfig ones{1, 1, 1, 1, 1};
    const Pixel p{10, 5, 3}, q{12, 5, 4};
    CHECK(information(p, p, ones) == 6.0);
    CHECK(information(p, q, ones) == 10.0);
    CHECK(information(p, q, WeightConfig{0, 0, 0, 0, 1}) == 0.0);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> c(0, 50), v(1, 10);
    std::uniform_real_distribution<double> wd(0.0, 5.0);
    for (int trial = 0; trial < 500; ++trial) {
        const Pixel a{c(rng), c(rng), v(rng)}, b{c(rng), c(rng), v(rng)};
        WeightConfig w{wd(rng), wd(rng), wd(rng), wd(rng), 1};
        CHECK(information(a, b, w) == information(b, a, w));
        const double base = information(a, b, w);
        w.w3 += 1.0;
        CHECK(information(a, b, w) >= base);
    }
}

TEST_CASE("weight config validation") {
    CHECK_NOTHROW(WeightConfig{1, 1, 1, 1, 0}.validate());
    CHECK_THROWS_AS(WeightConfig({-1, 1, 1, 1, 1}).validate(), Error);
    CHECK_THROWS_AS(WeightConfig({1, 1, 1, 1, -1}).validate(), Error);
    CHECK_THROWS_AS(WeightConfig({1, NAN, 1, 1, 1}).validate(), Error);
    CHECK_THROWS_AS(NeighborhoodSpec({NeighborhoodMode::Windowed, 0, 3}).validate(), Error);
    CHECK_NOTHROW(NeighborhoodSpec({NeighborhoodMode::Global, 0, 0}).validate());
}

TEST_CASE("rational words") {
    CHECK(Rational::make(4, 6) == Rational{2, 3});
    CHECK(Rational::make(0, 5) == Rational{0, 1});
    CHECK(Rational::make(3, -6) == Rational{-1, 2});
    CHECK(Rational{1, 3} < Rational{1, 2});
    CHECK(clustering_word(0, 1) == Rational{0, 1});
    CHECK(clustering_word(3, 3) == Rational{1, 1});
    CHECK(clustering_word(1, 4) == Rational{1, 6});
}

TEST_CASE("build_network small cases") {
    EncodeConfig cfg;
    cfg.n_scales = 4;
    const ScaleTimeGrid two(cfg, 1, {{0, 0, 5}, {1, 0, 5}});
    CHECK(build_network(two, {1, 0, 0, 0, 2}, {}).edges.size() == 1);
    CHECK(build_network(two, {1, 0, 0, 0, 1}, {}).edges.empty());  // I == theta is not a link
    CHECK(build_network(two, {1, 1, 1, 1, 0}, {}).edges.empty());
    CHECK_THROWS_AS(build_network(ScaleTimeGrid(cfg, 1, {}), {1, 1, 1, 1, 1}, {}), Error);
}

TEST_CASE("build_network matches brute force") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> wd(0.0, 3.0), td(0.0, 40.0);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const ScaleTimeGrid g = random_grid(seed, 20 + seed % 30, 30, 25);
        const WeightConfig w{wd(rng), wd(rng), wd(rng), wd(rng), td(rng)};
        const NeighborhoodSpec global{NeighborhoodMode::Global, 12, 10};
        const NeighborhoodSpec windowed{NeighborhoodMode::Windowed, 1 + static_cast<int>(seed % 7), 1 + static_cast<int>(seed % 5)};
        const EdgeSet eg = edge_set(build_network(g, w, global));
        const EdgeSet ew = edge_set(build_network(g, w, windowed));
        CHECK(eg == brute_force_edges(g, w, global));
        CHECK(ew == brute_force_edges(g, w, windowed));
        CHECK(std::includes(eg.begin(), eg.end(), ew.begin(), ew.end()));

        // Scaling every weight and theta by c > 0 keeps the edge set.
        WeightConfig scaled = w;
        for (double* x : {&scaled.w1, &scaled.w2, &scaled.w3, &scaled.w4, &scaled.theta}) *x *= 4.0;
        CHECK(edge_set(build_network(g, scaled, global)) == eg);
    }
}

TEST_CASE("clustering coefficients on small graphs") {
    SUBCASE("triangle") {
        const WordMap wm = clustering_coefficients(graph(3, {{0, 1}, {0, 2}, {1, 2}}));
        for (const Word& w : wm.words) CHECK(w.cc == Rational{1, 1});
    }
    SUBCASE("star with four leaves") {
        const WordMap wm = clustering_coefficients(graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
        for (const Word& w : wm.words) CHECK(w.cc == Rational{0, 1});
    }
    SUBCASE("isolated node") {
        const WordMap wm = clustering_coefficients(graph(2, {}));
        CHECK(wm.words.size() == 2);
        CHECK(wm.words[0].cc == Rational{0, 1});
    }
}

TEST_CASE("clustering coefficients match triangle counting on random graphs") {
    std::mt19937_64 rng(2024);
    std::bernoulli_distribution coin(0.3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::uint32_t>(2 + trial % 19);
        EdgeSet edges;
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = i + 1; j < n; ++j)
                if (coin(rng)) edges.insert({i, j});
        const WordMap wm = clustering_coefficients(graph(n, edges));
        REQUIRE(wm.words.size() == n);
        for (std::uint32_t i = 0; i < n; ++i) {
            CHECK(wm.words[i].cc == triangle_oracle(i, n, edges));
            CHECK(wm.words[i].cc.den > 0);
            CHECK(wm.words[i].cc.value() <= 1.0);
        }
    }
}

TEST_CASE("word map carries grid coordinates sorted by scale then time") {
    const ScaleTimeGrid g = random_grid(5, 60, 20, 20);
    const WordMap wm = clustering_coefficients(build_network(g, {1, 1, 0, 0, 4}, {}));
    REQUIRE(wm.size() == g.size());
    for (std::size_t i = 0; i < wm.size(); ++i) {
        CHECK(wm.words[i].scale == g.pixels()[i].scale);
        CHECK(wm.words[i].time == g.pixels()[i].time);
    }
    CHECK(wm.n_scales == 20);
    CHECK(wm.n_frames == 20);
}

TEST_CASE("complete neighbourhood clique has cc 1") {
    EncodeConfig cfg;
    cfg.n_scales = 10;
    std::vector<Pixel> px;
    for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 3; ++t) px.push_back({s, t, 4});
    const WordMap wm = clustering_coefficients(build_network(ScaleTimeGrid(cfg, 3, px), {1, 1, 1, 0, 100}, {}));
    for (const Word& w : wm.words) CHECK(w.cc == Rational{1, 1});
}
