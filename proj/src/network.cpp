#include "een/network.hpp"

#include <algorithm>
#include <numeric>

#include "een/error.hpp"

namespace een {

void WeightConfig::validate() const {
    for (double w : {w1, w2, w3, w4})
        require(std::isfinite(w) && w >= 0.0, ErrorCode::InvalidArgument, "weights must be finite and >= 0");
    require(std::isfinite(theta) && theta >= 0.0, ErrorCode::InvalidArgument, "theta must be finite and >= 0");
}

void NeighborhoodSpec::validate() const {
    if (mode == NeighborhoodMode::Windowed)
        require(r_scale >= 1 && r_time >= 1, ErrorCode::InvalidArgument, "window radii must be >= 1");
}

bool NeighborhoodSpec::is_candidate(const Pixel& p, const Pixel& q) const {
    if (p.scale == q.scale && p.time == q.time) return false;
    if (mode == NeighborhoodMode::Global) return true;
    return std::abs(p.scale - q.scale) <= r_scale && std::abs(p.time - q.time) <= r_time;
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
    require(den != 0, ErrorCode::InvalidArgument, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
    return {num, den};
}

std::vector<std::uint32_t> EenNetwork::degrees() const {
    std::vector<std::uint32_t> deg(nodes.size(), 0);
    for (auto [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

EenNetwork build_network(const ScaleTimeGrid& grid, const WeightConfig& w, const NeighborhoodSpec& nb) {
    w.validate();
    nb.validate();
    require(!grid.empty(), ErrorCode::EmptyGrid, "grid has no active pixels");

    EenNetwork net;
    net.nodes.assign(grid.pixels().begin(), grid.pixels().end());
    net.n_scales = grid.n_scales();
    net.n_frames = grid.n_frames();
    net.weights = w;
    const auto& px = net.nodes;
    const auto n = static_cast<std::uint32_t>(px.size());

    auto link = [&](std::uint32_t i, std::uint32_t j) {
        if (information(px[i], px[j], w) < w.theta) net.edges.emplace_back(i, j);
    };

    if (nb.mode == NeighborhoodMode::Global) {
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = i + 1; j < n; ++j) link(i, j);
        return net;
    }

    // Pixels are sorted by (scale, time): rows of equal scale are contiguous.
    std::vector<std::uint32_t> row_begin(static_cast<std::size_t>(grid.n_scales()) + 1, n);
    for (std::uint32_t i = n; i-- > 0;) row_begin[static_cast<std::size_t>(px[i].scale)] = i;
    for (std::size_t s = row_begin.size() - 1; s-- > 0;) row_begin[s] = std::min(row_begin[s], row_begin[s + 1]);

    auto by_time = [](const Pixel& p, int t) { return p.time < t; };
    for (std::uint32_t i = 0; i < n; ++i) {
        const Pixel& p = px[i];
        const int last_scale = std::min(grid.n_scales() - 1, p.scale + nb.r_scale);
        for (int s = p.scale; s <= last_scale; ++s) {
            const auto first = px.begin() + row_begin[static_cast<std::size_t>(s)];
            const auto last = px.begin() + row_begin[static_cast<std::size_t>(s) + 1];
            const int t_lo = s == p.scale ? p.time + 1 : p.time - nb.r_time;
            auto it = std::lower_bound(first, last, t_lo, by_time);
            for (; it != last && it->time <= p.time + nb.r_time; ++it)
                link(i, static_cast<std::uint32_t>(it - px.begin()));
        }
    }
    std::sort(net.edges.begin(), net.edges.end());
    return net;
}

void WordMap::sort() {
    std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) {
        return a.scale != b.scale ? a.scale < b.scale : a.time < b.time;
    });
}

WordMap clustering_coefficients(const EenNetwork& net) {
    const std::size_t n = net.nodes.size();
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (auto [a, b] : net.edges) {
        require(a != b && a < n && b < n, ErrorCode::InvalidArgument, "invalid edge");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }

    WordMap wm;
    wm.n_scales = net.n_scales;
    wm.n_frames = net.n_frames;
    wm.weights = net.weights;
    wm.words.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t twice_links = 0;
        for (std::uint32_t j : adj[i]) {
            const auto& a = adj[i];
            const auto& b = adj[j];
            std::size_t x = 0, y = 0;
            while (x < a.size() && y < b.size()) {
                if (a[x] < b[y]) ++x;
                else if (b[y] < a[x]) ++y;
                else {
                    ++twice_links;
                    ++x;
                    ++y;
                }
            }
        }
        wm.words.push_back({net.nodes[i].scale, net.nodes[i].time, clustering_word(twice_links / 2, adj[i].size())});
    }
    wm.sort();
    return wm;
}

}  // namespace een
