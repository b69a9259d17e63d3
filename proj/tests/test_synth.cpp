#include <doctest.h>

#include <map>
#include <unsupported/Eigen/FFT>

#include "een/error.hpp"
#include "een/synth.hpp"
#include "support.hpp"

using namespace een;
using namespace een::testing;

namespace {

// Independent timing table: letters spelled as unit strings, '1' on, '0' off.
const std::map<char, std::string> kTable{
    {'A', ".-"}, {'E', "."}, {'I', ".."}, {'M', "--"}, {'N', "-."}, {'O', "---"},
    {'P', ".--."}, {'R', ".-."}, {'S', "..."}, {'T', "-"}, {'5', "....."}, {'0', "-----"},
};

std::string keying(const std::string& text) {
    std::string out;
    bool first_word = true;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && text[i] == ' ') ++i;
        if (i == text.size()) break;
        if (!first_word) out += std::string(7, '0');
        first_word = false;
        bool first_char = true;
        for (; i < text.size() && text[i] != ' '; ++i) {
            if (!first_char) out += "000";
            first_char = false;
            const std::string& code = kTable.at(text[i]);
            for (std::size_t k = 0; k < code.size(); ++k) {
                if (k > 0) out += "0";
                out += code[k] == '.' ? "1" : "111";
            }
        }
    }
    return out;
}

std::string expand(const std::vector<std::pair<bool, int>>& runs) {
    std::string out;
    for (auto [on, units] : runs) out += std::string(static_cast<std::size_t>(units), on ? '1' : '0');
    return out;
}

// Welch-averaged power per FFT bin (segments of 4096 samples, no window).
std::vector<double> averaged_power(const std::vector<double>& x) {
    constexpr std::size_t kSeg = 4096;
    Eigen::FFT<double> fft;
    std::vector<double> acc(kSeg / 2 + 1, 0.0);
    std::vector<double> seg(kSeg);
    std::vector<std::complex<double>> spec;
    for (std::size_t start = 0; start + kSeg <= x.size(); start += kSeg) {
        std::copy(x.begin() + static_cast<std::ptrdiff_t>(start), x.begin() + static_cast<std::ptrdiff_t>(start + kSeg),
                  seg.begin());
        fft.fwd(spec, seg);
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += std::norm(spec[k]);
    }
    return acc;
}

// Octave k spans [nyquist / 2^k, nyquist / 2^(k-1)); octave 1 is the top one.
// Returns total band power and mean per-bin power.
std::pair<double, double> octave(const std::vector<double>& power, int k) {
    const std::size_t top = power.size() - 1;
    const std::size_t hi = top >> (k - 1), lo = top >> k;
    double sum = 0.0;
    for (std::size_t b = lo; b < hi; ++b) sum += power[b];
    return {sum, sum / static_cast<double>(hi - lo)};
}

double db(double ratio) {
    return 10.0 * std::log10(ratio);
}

}  // namespace

TEST_CASE("morse timing") {
    CHECK(expand(morse_timing("E")) == "1");
    CHECK(expand(morse_timing("EE")) == "10001");
    CHECK(expand(morse_timing("SOS")) == keying("SOS"));
    for (const std::string text : {"PARIS", "SOS SOS", "  MEAN  TIME ", "A5 0N", "TRIP"})
        CHECK(expand(morse_timing(text)) == keying(text));
    CHECK(expand(morse_timing("paris")) == keying("PARIS"));
    CHECK(keying("PARIS").size() + 7 == 50);
    CHECK_THROWS_AS(morse_timing("SOS#"), Error);
    try {
        morse_timing("~");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnsupportedCharacter);
    }
}

TEST_CASE("morse audio") {
    const SampleBuffer e = gen_morse("E", 12.0, 700.0, 44100);
    CHECK(e.samples.size() == 4410);
    CHECK(gen_morse("EE", 12.0, 700.0, 44100).samples.size() == 22050);
    CHECK(gen_morse("PARIS PARIS", 24.0, 700.0, 44100).samples.size() * 2 ==
          gen_morse("PARIS PARIS", 12.0, 700.0, 44100).samples.size());
    for (double s : e.samples) CHECK(std::abs(s) <= 1.0);

    const EncodeConfig cfg;
    const ScaleTimeGrid g = encode(gen_morse("T", 12.0, 700.0, 44100), cfg);
    const int expected = *scale_of_frequency(700.0, cfg);
    for (int t = 0; t < 3; ++t) CHECK(g.volume_at(expected, t) == cfg.vmax);
    CHECK_THROWS_AS(gen_morse("E", 12.0, 700.0, 8000), Error);

    const SampleBuffer corpus = gen_morse_corpus(7.5, 12.0, 700.0, 5, 44100);
    CHECK(corpus.samples.size() == 330750);
    CHECK(corpus.samples == gen_morse_corpus(7.5, 12.0, 700.0, 5, 44100).samples);
}

TEST_CASE("tone corpus") {
    const EncodeConfig cfg;
    SUBCASE("single event") {
        const SampleBuffer buf = gen_tone_corpus({{33, 0.0, 0.5, 0.7}}, cfg, 44100);
        double peak = 0.0;
        for (double s : buf.samples) peak = std::max(peak, std::abs(s));
        CHECK(peak == doctest::Approx(1.0));
        const Eigen::MatrixXd raw = map_to_scales(compute_spectrogram(buf, cfg), cfg);
        Eigen::Index row = 0, col = 0;
        raw.maxCoeff(&row, &col);
        CHECK(row == 33);
    }
    SUBCASE("empty list is silent") {
        const SampleBuffer buf = gen_tone_corpus({}, cfg, 44100);
        CHECK(buf.samples.empty());
        CHECK(buf.sample_rate == 44100);
    }
    SUBCASE("octave pair shares frames") {
        const ScaleTimeGrid g = encode(gen_tone_corpus({{40, 0.0, 0.6, 0.5}, {52, 0.0, 0.6, 0.5}}, cfg, 44100), cfg);
        for (int t = 0; t < 6; ++t) {
            CHECK(g.volume_at(40, t).has_value());
            CHECK(g.volume_at(52, t).has_value());
        }
    }
    SUBCASE("every event keeps its scale active") {
        const auto events = structured_tone_events(6.4, cfg);
        const ScaleTimeGrid g = encode(gen_tone_corpus(events, cfg, 44100), cfg);
        for (const ToneEvent& e : events) {
            const int first = static_cast<int>(std::llround(e.start / cfg.frame_sec));
            const int frames = static_cast<int>(std::floor(e.duration / cfg.frame_sec + 1e-9));
            int active = 0;
            for (int t = first; t < first + frames; ++t) active += g.volume_at(e.scale, t).has_value();
            CHECK(active >= frames);
        }
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(gen_tone_corpus({{84, 0, 1, 1}}, cfg, 44100), Error);
        CHECK_THROWS_AS(gen_tone_corpus({{10, 0, 0, 1}}, cfg, 44100), Error);
        CHECK_THROWS_AS(gen_tone_corpus({{10, 0, 1, 1}}, cfg, 11025), Error);
    }
}

TEST_CASE("structured corpus shape") {
    const EncodeConfig cfg;
    const auto events = structured_tone_events(30.0, cfg);
    double end = 0.0;
    for (const auto& e : events) {
        end = std::max(end, e.start + e.duration);
        CHECK(e.scale >= 36);
        CHECK(e.scale < cfg.n_scales);
        // Note boundaries fall on frame boundaries.
        CHECK(std::abs(e.start / cfg.frame_sec - std::round(e.start / cfg.frame_sec)) < 1e-9);
    }
    CHECK(end == doctest::Approx(30.0));
    CHECK(random_english_text(5, 1) == random_english_text(5, 1));
    CHECK(random_english_text(20, 1) != random_english_text(20, 2));
    CHECK_NOTHROW(morse_timing(random_english_text(200, 3)));
}

TEST_CASE("noise") {
    const SampleBuffer w1 = gen_noise(NoiseKind::White, 0.5, 4, 44100);
    CHECK(w1.samples == gen_noise(NoiseKind::White, 0.5, 4, 44100).samples);
    CHECK(w1.samples != gen_noise(NoiseKind::White, 0.5, 5, 44100).samples);
    CHECK(gen_noise(NoiseKind::Pink, 0.5, 4, 44100).samples == gen_noise(NoiseKind::Pink, 0.5, 4, 44100).samples);
    for (double s : w1.samples) {
        CHECK(s >= -1.0);
        CHECK(s < 1.0);
    }
    CHECK_THROWS_AS(gen_noise(NoiseKind::White, 0.0, 4, 44100), Error);
}

TEST_CASE("noise spectra") {
    SUBCASE("white noise has a flat per-Hz density") {
        const auto p = averaged_power(gen_noise(NoiseKind::White, 10.0, 21, 44100).samples);
        for (int k = 1; k < 9; ++k) {
            CAPTURE(k);
            CHECK(std::abs(db(octave(p, k).second / octave(p, k + 1).second)) <= 3.0);
        }
    }
    SUBCASE("pink noise has constant power per octave") {
        const auto p = averaged_power(gen_noise(NoiseKind::Pink, 10.0, 22, 44100).samples);
        double mean = 0.0;
        for (int k = 3; k <= 9; ++k) mean += octave(p, k).first / 7.0;
        for (int k = 3; k <= 9; ++k) {
            CAPTURE(k);
            CHECK(std::abs(db(octave(p, k).first / mean)) <= 2.0);
        }
    }
}
