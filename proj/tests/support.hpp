#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "een/ingest.hpp"
#include "een/network.hpp"

namespace een::testing {

inline std::vector<double> sine(double hz, double seconds, int rate, double amplitude = 1.0) {
    std::vector<double> x(static_cast<std::size_t>(std::llround(seconds * rate)));
    for (std::size_t n = 0; n < x.size(); ++n)
        x[n] = amplitude * std::sin(2.0 * std::numbers::pi * hz * static_cast<double>(n) / rate);
    return x;
}

// Random grid with distinct pixels; volumes in [activity_min, vmax].
inline ScaleTimeGrid random_grid(std::uint64_t seed, std::size_t n, int n_scales, int n_frames,
                                 EncodeConfig cfg = {}) {
    cfg.n_scales = n_scales;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> s(0, n_scales - 1), t(0, n_frames - 1), v(cfg.activity_min, cfg.vmax);
    std::set<std::pair<int, int>> seen;
    std::vector<Pixel> px;
    while (px.size() < n) {
        const int a = s(rng), b = t(rng);
        if (seen.insert({a, b}).second) px.push_back({a, b, v(rng)});
    }
    return ScaleTimeGrid(cfg, n_frames, std::move(px));
}

// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("een_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

// Minimal RIFF/WAVE writer for decoder tests (any integer or float layout).
inline std::vector<std::uint8_t> wav_bytes(int rate, int channels, int bits, bool is_float,
                                           const std::vector<std::uint8_t>& data) {
    std::vector<std::uint8_t> out;
    auto put = [&](std::uint64_t v, int n) {
        for (int i = 0; i < n; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    };
    auto tag = [&](const char* s) { out.insert(out.end(), s, s + 4); };
    tag("RIFF");
    put(36 + data.size(), 4);
    tag("WAVE");
    tag("fmt ");
    put(16, 4);
    put(is_float ? 3 : 1, 2);
    put(static_cast<std::uint64_t>(channels), 2);
    put(static_cast<std::uint64_t>(rate), 4);
    put(static_cast<std::uint64_t>(rate * channels * bits / 8), 4);
    put(static_cast<std::uint64_t>(channels * bits / 8), 2);
    put(static_cast<std::uint64_t>(bits), 2);
    tag("data");
    put(data.size(), 4);
    out.insert(out.end(), data.begin(), data.end());
    return out;
}

}  // namespace een::testing
