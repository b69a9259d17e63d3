#include "een/selforg.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace een {
namespace {

void validate_list(const std::vector<double>& values, const char* name) {
    require(!values.empty(), ErrorCode::InvalidArgument, std::string(name) + " list is empty");
    for (std::size_t i = 0; i < values.size(); ++i) {
        require(std::isfinite(values[i]) && values[i] >= 0.0, ErrorCode::InvalidArgument,
                std::string(name) + " values must be finite and >= 0");
        require(i == 0 || values[i - 1] <= values[i], ErrorCode::InvalidArgument,
                std::string(name) + " values must be ascending");
    }
}

// Linear-interpolation order statistic over a sorted sequence given by `value_at`.
template <typename ValueAt>
double interpolate_percentile(std::size_t n, double percentile, ValueAt&& value_at) {
    if (n == 0) return 0.0;
    const double pos = percentile / 100.0 * static_cast<double>(n - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const double frac = pos - static_cast<double>(lo);
    const double a = value_at(lo);
    if (lo + 1 >= n || frac == 0.0) return a;
    const double b = value_at(lo + 1);
    return a + frac * (b - a);
}

double class_information(const WeightConfig& w, int ds, int dt, int dv, int vs) {
    return w.w1 * ds + w.w2 * dt + w.w3 * dv + w.w4 * std::abs(static_cast<double>(vs));
}

}  // namespace

GridSpec GridSpec::desk_default() {
    GridSpec spec;
    const std::vector<double> weights{1, 2, 3, 4, 5, 6, 7, 8};
    spec.values_w1 = spec.values_w2 = spec.values_w3 = spec.values_w4 = weights;
    spec.values_theta = {10, 20, 30, 40, 50, 60, 70, 80, 90};
    spec.theta_mode = ThetaMode::Percentile;
    return spec;
}

void GridSpec::validate() const {
    validate_list(values_w1, "w1");
    validate_list(values_w2, "w2");
    validate_list(values_w3, "w3");
    validate_list(values_w4, "w4");
    validate_list(values_theta, "theta");
    if (theta_mode == ThetaMode::Percentile)
        require(values_theta.back() <= 100.0, ErrorCode::InvalidArgument, "theta percentiles must lie in [0, 100]");
    neighborhood.validate();
}

std::size_t GridSpec::weight_count() const {
    return values_w1.size() * values_w2.size() * values_w3.size() * values_w4.size();
}

std::size_t GridSpec::combination_count() const {
    return weight_count() * values_theta.size();
}

WeightConfig GridSpec::weights_at(std::size_t index) const {
    WeightConfig w;
    w.w4 = values_w4[index % values_w4.size()];
    index /= values_w4.size();
    w.w3 = values_w3[index % values_w3.size()];
    index /= values_w3.size();
    w.w2 = values_w2[index % values_w2.size()];
    index /= values_w2.size();
    w.w1 = values_w1[index % values_w1.size()];
    w.theta = 0.0;
    return w;
}

std::vector<WeightConfig> enumerate_grid(const GridSpec& spec) {
    spec.validate();
    std::vector<WeightConfig> out;
    out.reserve(spec.combination_count());
    for (std::size_t i = 0; i < spec.weight_count(); ++i) {
        WeightConfig w = spec.weights_at(i);
        for (double theta : spec.values_theta) {
            w.theta = theta;
            out.push_back(w);
        }
    }
    return out;
}

EvalResult assess(const WeightConfig& config, const RankTable& rt) {
    EvalResult r;
    r.config = config;
    r.word_types = static_cast<std::int64_t>(rt.size());
    try {
        const ZipfFit fit = zipf_fit(rt, 1);
        r.r2 = fit.r2;
        r.zipf_a = fit.a;
        r.zipf_b = fit.b;
        r.qualifies = fit.r2 > kQualifyingR2;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::InsufficientData) throw;
    }
    return r;
}

EvalResult evaluate_config(const ScaleTimeGrid& grid, const WeightConfig& w, const NeighborhoodSpec& nb) {
    const EenNetwork net = build_network(grid, w, nb);
    return assess(w, rank_table(clustering_coefficients(net)));
}

double information_percentile(const ScaleTimeGrid& grid, const WeightConfig& w, const NeighborhoodSpec& nb,
                              double percentile) {
    std::vector<double> values;
    const auto px = grid.pixels();
    for (std::size_t i = 0; i < px.size(); ++i)
        for (std::size_t j = i + 1; j < px.size(); ++j)
            if (nb.is_candidate(px[i], px[j])) values.push_back(information(px[i], px[j], w));
    std::sort(values.begin(), values.end());
    return interpolate_percentile(values.size(), percentile, [&](std::size_t k) { return values[k]; });
}

// ---------------------------------------------------------------------------
// PreparedGrid

struct PreparedGrid::Workspace {
    std::vector<std::uint64_t> bits;
    std::vector<std::uint32_t> degree;
    std::vector<std::uint64_t> links;
    std::vector<double> class_info;
    std::vector<std::uint32_t> class_order;
};

PreparedGrid::PreparedGrid(const ScaleTimeGrid& grid, const NeighborhoodSpec& nb) : grid_(&grid) {
    nb.validate();
    require(!grid.empty(), ErrorCode::EmptyGrid, "grid has no active pixels");
    const auto px = grid.pixels();
    const auto n = static_cast<std::uint32_t>(px.size());

    grid_index_.resize(n);
    std::iota(grid_index_.begin(), grid_index_.end(), 0u);
    std::sort(grid_index_.begin(), grid_index_.end(), [&](std::uint32_t a, std::uint32_t b) {
        return px[a].time != px[b].time ? px[a].time < px[b].time : px[a].scale < px[b].scale;
    });
    nodes_.reserve(n);
    for (std::uint32_t g : grid_index_) nodes_.push_back(px[g]);

    const bool global = nb.mode == NeighborhoodMode::Global;

    // Candidate pairs, keyed by their information signature.
    struct RawPair {
        std::uint64_t key;
        std::uint32_t a, b;
    };
    std::vector<RawPair> raw;
    for (std::uint32_t i = 0; i < n; ++i) {
        const Pixel& p = nodes_[i];
        for (std::uint32_t j = i + 1; j < n; ++j) {
            const Pixel& q = nodes_[j];
            if (!global && q.time > p.time + nb.r_time) break;
            if (!nb.is_candidate(p, q)) continue;
            const auto ds = static_cast<std::uint64_t>(std::abs(p.scale - q.scale));
            const auto dt = static_cast<std::uint64_t>(std::abs(p.time - q.time));
            const auto dv = static_cast<std::uint64_t>(std::abs(p.volume - q.volume));
            const auto vs = static_cast<std::uint64_t>(p.volume + q.volume);
            require(ds < 65536 && dt < 65536 && dv < 65536 && vs < 65536, ErrorCode::InvalidArgument,
                    "pixel coordinates exceed the pair signature range");
            raw.push_back({ds << 48 | dt << 32 | dv << 16 | vs, i, j});
        }
    }
    std::sort(raw.begin(), raw.end(), [](const RawPair& x, const RawPair& y) {
        return x.key != y.key ? x.key < y.key : (x.a != y.a ? x.a < y.a : x.b < y.b);
    });
    pairs_.reserve(raw.size());
    for (std::size_t k = 0; k < raw.size();) {
        std::size_t e = k;
        while (e < raw.size() && raw[e].key == raw[k].key) ++e;
        const std::uint64_t key = raw[k].key;
        classes_.push_back({static_cast<int>(key >> 48), static_cast<int>((key >> 32) & 0xFFFF),
                            static_cast<int>((key >> 16) & 0xFFFF), static_cast<int>(key & 0xFFFF),
                            static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(e)});
        for (; k < e; ++k) pairs_.emplace_back(raw[k].a, raw[k].b);
    }

    // Adjacency rows only span the nodes that can be neighbours.
    row_first_word_.resize(n);
    row_offset_.assign(static_cast<std::size_t>(n) + 1, 0);
    std::uint32_t lo = 0, hi = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint32_t first = 0, last = n - 1;
        if (!global) {
            while (nodes_[lo].time < nodes_[i].time - nb.r_time) ++lo;
            if (hi < i) hi = i;
            while (hi + 1 < n && nodes_[hi + 1].time <= nodes_[i].time + nb.r_time) ++hi;
            first = lo;
            last = hi;
        }
        row_first_word_[i] = first / 64;
        row_offset_[i + 1] = row_offset_[i] + (last / 64 - first / 64 + 1);
    }
}

std::vector<double> PreparedGrid::percentile_thresholds(const WeightConfig& w,
                                                        std::span<const double> percentiles) const {
    std::vector<double> info(classes_.size());
    std::vector<std::uint32_t> order(classes_.size());
    for (std::size_t c = 0; c < classes_.size(); ++c) {
        const auto& k = classes_[c];
        info[c] = class_information(w, k.dscale, k.dtime, k.dvolume, k.vsum);
    }
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return info[a] < info[b]; });
    std::vector<std::size_t> cumulative(order.size() + 1, 0);
    for (std::size_t k = 0; k < order.size(); ++k)
        cumulative[k + 1] = cumulative[k] + (classes_[order[k]].end - classes_[order[k]].begin);

    auto value_at = [&](std::size_t rank) {
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), rank);
        return info[order[static_cast<std::size_t>(it - cumulative.begin()) - 1]];
    };
    std::vector<double> out;
    out.reserve(percentiles.size());
    for (double p : percentiles) out.push_back(interpolate_percentile(pairs_.size(), p, value_at));
    return out;
}

template <typename Snapshot>
void PreparedGrid::sweep(const WeightConfig& w, std::span<const double> thetas, Workspace& ws,
                         Snapshot&& snapshot) const {
    const std::size_t n = nodes_.size();
    ws.bits.assign(row_offset_.back(), 0);
    ws.degree.assign(n, 0);
    ws.links.assign(n, 0);
    ws.class_info.resize(classes_.size());
    ws.class_order.resize(classes_.size());
    for (std::size_t c = 0; c < classes_.size(); ++c) {
        const auto& k = classes_[c];
        ws.class_info[c] = class_information(w, k.dscale, k.dtime, k.dvolume, k.vsum);
    }
    std::iota(ws.class_order.begin(), ws.class_order.end(), 0u);
    std::stable_sort(ws.class_order.begin(), ws.class_order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return ws.class_info[a] < ws.class_info[b]; });

    std::vector<std::size_t> theta_order(thetas.size());
    std::iota(theta_order.begin(), theta_order.end(), std::size_t{0});
    std::stable_sort(theta_order.begin(), theta_order.end(),
                     [&](std::size_t a, std::size_t b) { return thetas[a] < thetas[b]; });

    std::uint64_t* bits = ws.bits.data();
    auto add_edge = [&](std::uint32_t u, std::uint32_t v) {
        const std::uint32_t fu = row_first_word_[u], fv = row_first_word_[v];
        const std::uint32_t lu = fu + (row_offset_[u + 1] - row_offset_[u]) - 1;
        const std::uint32_t lv = fv + (row_offset_[v + 1] - row_offset_[v]) - 1;
        const std::uint64_t* ru = bits + row_offset_[u] - fu;
        const std::uint64_t* rv = bits + row_offset_[v] - fv;
        std::uint64_t common = 0;
        for (std::uint32_t word = std::max(fu, fv), end = std::min(lu, lv); word <= end; ++word) {
            std::uint64_t x = ru[word] & rv[word];
            common += static_cast<std::uint64_t>(std::popcount(x));
            while (x) {
                ++ws.links[word * 64u + static_cast<std::uint32_t>(std::countr_zero(x))];
                x &= x - 1;
            }
        }
        ws.links[u] += common;
        ws.links[v] += common;
        bits[row_offset_[u] + v / 64 - fu] |= std::uint64_t{1} << (v % 64);
        bits[row_offset_[v] + u / 64 - fv] |= std::uint64_t{1} << (u % 64);
        ++ws.degree[u];
        ++ws.degree[v];
    };

    std::size_t cursor = 0;
    for (std::size_t k : theta_order) {
        const double theta = thetas[k];
        while (cursor < ws.class_order.size() && ws.class_info[ws.class_order[cursor]] < theta) {
            const auto& cls = classes_[ws.class_order[cursor]];
            for (std::uint32_t p = cls.begin; p < cls.end; ++p) add_edge(pairs_[p].first, pairs_[p].second);
            ++cursor;
        }
        snapshot(k);
    }
}

std::vector<EvalResult> PreparedGrid::evaluate(const WeightConfig& w, std::span<const double> thetas) const {
    w.validate();
    for (double t : thetas)
        require(std::isfinite(t) && t >= 0.0, ErrorCode::InvalidArgument, "theta must be finite and >= 0");
    std::vector<EvalResult> results(thetas.size());
    Workspace ws;
    std::vector<Rational> words(nodes_.size());
    std::vector<std::pair<Rational, std::int64_t>> counts;
    sweep(w, thetas, ws, [&](std::size_t k) {
        for (std::size_t i = 0; i < nodes_.size(); ++i) words[i] = clustering_word(ws.links[i], ws.degree[i]);
        std::sort(words.begin(), words.end());
        counts.clear();
        for (std::size_t i = 0; i < words.size();) {
            std::size_t j = i;
            while (j < words.size() && words[j] == words[i]) ++j;
            counts.emplace_back(words[i], static_cast<std::int64_t>(j - i));
            i = j;
        }
        WeightConfig config = w;
        config.theta = thetas[k];
        results[k] = assess(config, rank_table_from_counts(counts));
    });
    return results;
}

WordMap PreparedGrid::word_map(const WeightConfig& w) const {
    w.validate();
    WordMap wm;
    wm.n_scales = grid_->n_scales();
    wm.n_frames = grid_->n_frames();
    wm.weights = w;
    Workspace ws;
    const double theta = w.theta;
    sweep(w, std::span<const double>(&theta, 1), ws, [&](std::size_t) {
        wm.words.reserve(nodes_.size());
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            wm.words.push_back({nodes_[i].scale, nodes_[i].time, clustering_word(ws.links[i], ws.degree[i])});
    });
    wm.sort();
    return wm;
}

// ---------------------------------------------------------------------------

const EvalResult& SearchOutcome::best() const {
    require(winner.has_value(), ErrorCode::NoQualifyingCombo, "no combination reaches R^2 > 0.8");
    return results[*winner];
}

std::optional<std::size_t> select_winner(std::span<const EvalResult> results) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const EvalResult& r = results[i];
        if (!r.qualifies) continue;
        if (!best) {
            best = i;
            continue;
        }
        const EvalResult& b = results[*best];
        if (r.word_types > b.word_types || (r.word_types == b.word_types && r.r2 > b.r2)) best = i;
    }
    return best;
}

SearchOutcome self_organize(const ScaleTimeGrid& grid, const GridSpec& spec, unsigned jobs) {
    spec.validate();
    require(!grid.empty(), ErrorCode::EmptyGrid, "grid has no active pixels");
    const PreparedGrid prepared(grid, spec.neighborhood);

    const std::size_t n_weights = spec.weight_count();
    const std::size_t n_theta = spec.values_theta.size();
    SearchOutcome outcome;
    outcome.results.resize(n_weights * n_theta);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (std::size_t wi = next++; wi < n_weights; wi = next++) {
                const WeightConfig w = spec.weights_at(wi);
                const std::vector<double> thetas = spec.theta_mode == ThetaMode::Percentile
                                                       ? prepared.percentile_thresholds(w, spec.values_theta)
                                                       : spec.values_theta;
                const auto results = prepared.evaluate(w, thetas);
                std::copy(results.begin(), results.end(),
                          outcome.results.begin() + static_cast<std::ptrdiff_t>(wi * n_theta));
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = n_weights;
        }
    };

    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, n_weights));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    outcome.winner = select_winner(outcome.results);
    return outcome;
}

}  // namespace een
