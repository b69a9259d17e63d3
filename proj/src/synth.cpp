#include "een/synth.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cmath>
#include <numbers>

#include "een/error.hpp"
#include "een/rng.hpp"

namespace een {
namespace {

constexpr double kToneFadeSec = 0.005;
constexpr double kMorseRampSec = 0.002;
constexpr int kPinkRows = 16;

void check_rate(int sample_rate, const EncodeConfig& cfg) {
    require(sample_rate > 0, ErrorCode::InvalidArgument, "sample rate must be positive");
    require(sample_rate >= cfg.min_sample_rate(), ErrorCode::SampleRateTooLow,
            "sample rate below the Nyquist requirement of the scale bins");
}

void normalize_peak(std::vector<double>& x) {
    double peak = 0.0;
    for (double v : x) peak = std::max(peak, std::abs(v));
    if (peak > 0.0)
        for (double& v : x) v /= peak;
}

// Linear attack/release envelope over `ramp` samples at both ends of a segment.
double ramp_gain(std::size_t n, std::size_t length, std::size_t ramp) {
    if (ramp == 0) return 1.0;
    const double in = static_cast<double>(n + 1) / static_cast<double>(ramp);
    const double out = static_cast<double>(length - n) / static_cast<double>(ramp);
    return std::min({1.0, in, out});
}

struct MorseEntry {
    char symbol;
    std::string_view code;
};

constexpr std::array<MorseEntry, 54> kMorseTable{{
    {'A', ".-"},     {'B', "-..."},   {'C', "-.-."},   {'D', "-.."},    {'E', "."},      {'F', "..-."},
    {'G', "--."},    {'H', "...."},   {'I', ".."},     {'J', ".---"},   {'K', "-.-"},    {'L', ".-.."},
    {'M', "--"},     {'N', "-."},     {'O', "---"},    {'P', ".--."},   {'Q', "--.-"},   {'R', ".-."},
    {'S', "..."},    {'T', "-"},      {'U', "..-"},    {'V', "...-"},   {'W', ".--"},    {'X', "-..-"},
    {'Y', "-.--"},   {'Z', "--.."},   {'0', "-----"},  {'1', ".----"},  {'2', "..---"},  {'3', "...--"},
    {'4', "....-"},  {'5', "....."},  {'6', "-...."},  {'7', "--..."},  {'8', "---.."},  {'9', "----."},
    {'.', ".-.-.-"}, {',', "--..--"}, {'?', "..--.."}, {'\'', ".----."}, {'!', "-.-.--"}, {'/', "-..-."},
    {'(', "-.--."},  {')', "-.--.-"}, {'&', ".-..."},  {':', "---..."}, {';', "-.-.-."}, {'=', "-...-"},
    {'+', ".-.-."},  {'-', "-....-"}, {'_', "..--.-"}, {'"', ".-..-."}, {'$', "...-..-"}, {'@', ".--.-."},
}};

constexpr std::array<std::string_view, 100> kEnglishWords{
    "the",   "of",    "and",   "to",    "in",    "is",    "you",   "that",  "it",    "he",
    "was",   "for",   "on",    "are",   "as",    "with",  "his",   "they",  "at",    "be",
    "this",  "have",  "from",  "or",    "one",   "had",   "by",    "word",  "but",   "not",
    "what",  "all",   "were",  "we",    "when",  "your",  "can",   "said",  "there", "use",
    "an",    "each",  "which", "she",   "do",    "how",   "their", "if",    "will",  "up",
    "other", "about", "out",   "many",  "then",  "them",  "these", "so",    "some",  "her",
    "would", "make",  "like",  "him",   "into",  "time",  "has",   "look",  "two",   "more",
    "write", "go",    "see",   "number", "no",   "way",   "could", "people", "my",   "than",
    "first", "water", "been",  "call",  "who",   "oil",   "its",   "now",   "find",  "long",
    "down",  "day",   "did",   "get",   "come",  "made",  "may",   "part",  "music", "river",
};

}  // namespace

SampleBuffer gen_tone_corpus(const std::vector<ToneEvent>& events, const EncodeConfig& cfg, int sample_rate) {
    cfg.validate();
    check_rate(sample_rate, cfg);
    double end = 0.0;
    for (const auto& e : events) {
        require(e.scale >= 0 && e.scale < cfg.n_scales, ErrorCode::InvalidArgument, "event scale out of range");
        require(std::isfinite(e.start) && e.start >= 0.0, ErrorCode::InvalidArgument, "event start must be >= 0");
        require(std::isfinite(e.duration) && e.duration > 0.0, ErrorCode::InvalidArgument,
                "event duration must be > 0");
        require(e.amplitude > 0.0 && e.amplitude <= 1.0, ErrorCode::InvalidArgument,
                "event amplitude must lie in (0, 1]");
        end = std::max(end, e.start + e.duration);
    }

    SampleBuffer buf;
    buf.sample_rate = sample_rate;
    buf.samples.assign(static_cast<std::size_t>(std::ceil(end * sample_rate - 1e-9)), 0.0);
    const auto fade = static_cast<std::size_t>(std::llround(kToneFadeSec * sample_rate));
    for (const auto& e : events) {
        const auto first = static_cast<std::size_t>(std::llround(e.start * sample_rate));
        const auto length = std::min(static_cast<std::size_t>(std::llround(e.duration * sample_rate)),
                                     buf.samples.size() - std::min(first, buf.samples.size()));
        const double omega = 2.0 * std::numbers::pi * cfg.center_hz(e.scale) / sample_rate;
        const std::size_t ramp = std::min(fade, length / 2);
        for (std::size_t n = 0; n < length; ++n)
            buf.samples[first + n] += e.amplitude * ramp_gain(n, length, ramp) * std::sin(omega * static_cast<double>(n));
    }
    normalize_peak(buf.samples);
    return buf;
}

std::string_view morse_code(char c) {
    const char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (const auto& entry : kMorseTable)
        if (entry.symbol == upper) return entry.code;
    return {};
}

std::vector<std::pair<bool, int>> morse_timing(std::string_view text) {
    std::vector<std::pair<bool, int>> runs;
    auto push = [&](bool on, int units) {
        if (!runs.empty() && runs.back().first == on) runs.back().second += units;
        else runs.emplace_back(on, units);
    };
    bool pending_word_gap = false;
    bool pending_char_gap = false;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!runs.empty()) pending_word_gap = true;
            continue;
        }
        const std::string_view code = morse_code(c);
        require(!code.empty(), ErrorCode::UnsupportedCharacter,
                std::string("character '") + c + "' has no Morse code");
        if (pending_word_gap) push(false, 7);
        else if (pending_char_gap) push(false, 3);
        pending_word_gap = false;
        for (std::size_t i = 0; i < code.size(); ++i) {
            if (i > 0) push(false, 1);
            push(true, code[i] == '.' ? 1 : 3);
        }
        pending_char_gap = true;
    }
    return runs;
}

SampleBuffer gen_morse(std::string_view text, double wpm, double carrier_hz, int sample_rate) {
    require(std::isfinite(wpm) && wpm > 0.0, ErrorCode::InvalidArgument, "wpm must be > 0");
    check_rate(sample_rate, EncodeConfig{});
    require(carrier_hz > 0.0 && carrier_hz < sample_rate / 2.0, ErrorCode::InvalidArgument,
            "carrier must lie below the Nyquist frequency");
    const auto runs = morse_timing(text);
    const double unit = 1.2 / wpm;

    long long total_units = 0;
    for (const auto& [on, units] : runs) total_units += units;
    auto sample_at = [&](long long units) {
        return static_cast<std::size_t>(std::llround(static_cast<double>(units) * unit * sample_rate));
    };

    SampleBuffer buf;
    buf.sample_rate = sample_rate;
    buf.samples.assign(sample_at(total_units), 0.0);
    const double omega = 2.0 * std::numbers::pi * carrier_hz / sample_rate;
    const auto ramp_len = static_cast<std::size_t>(std::llround(kMorseRampSec * sample_rate));
    long long cursor = 0;
    for (const auto& [on, units] : runs) {
        const std::size_t first = sample_at(cursor);
        const std::size_t last = sample_at(cursor + units);
        cursor += units;
        if (!on) continue;
        const std::size_t length = last - first;
        const std::size_t ramp = std::min(ramp_len, length / 2);
        for (std::size_t n = 0; n < length; ++n)
            buf.samples[first + n] = ramp_gain(n, length, ramp) * std::sin(omega * static_cast<double>(first + n));
    }
    return buf;
}

SampleBuffer gen_noise(NoiseKind kind, double duration, std::uint64_t seed, int sample_rate) {
    require(std::isfinite(duration) && duration > 0.0, ErrorCode::InvalidArgument, "duration must be > 0");
    check_rate(sample_rate, EncodeConfig{});
    SampleBuffer buf;
    buf.sample_rate = sample_rate;
    const auto n = static_cast<std::size_t>(std::llround(duration * sample_rate));
    buf.samples.resize(n);
    Rng rng(seed);
    if (kind == NoiseKind::White) {
        for (double& v : buf.samples) v = uniform_symmetric(rng);
        return buf;
    }
    // Voss-McCartney: row k is redrawn whenever bit k is the lowest set bit of the sample counter.
    std::array<double, kPinkRows> rows{};
    double sum = 0.0;
    for (double& r : rows) {
        r = uniform_symmetric(rng);
        sum += r;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) {
            const int k = std::countr_zero(static_cast<std::uint64_t>(i));
            if (k < kPinkRows) {
                sum -= rows[static_cast<std::size_t>(k)];
                rows[static_cast<std::size_t>(k)] = uniform_symmetric(rng);
                sum += rows[static_cast<std::size_t>(k)];
            }
        }
        buf.samples[i] = sum;
    }
    normalize_peak(buf.samples);
    return buf;
}

std::vector<ToneEvent> structured_tone_events(double duration, const EncodeConfig& cfg) {
    // I - V - vi - IV progression rooted at scale 36, one chord per 1.6 s bar.
    constexpr int kRoot = 36;
    constexpr double kBar = 1.6;
    constexpr double kStep = 0.2;
    const std::array<std::array<int, 3>, 4> chords{{{0, 4, 7}, {7, 11, 14}, {9, 12, 16}, {5, 9, 12}}};
    const std::array<int, 8> arpeggio{0, 1, 2, 1, 0, 2, 1, 2};

    std::vector<ToneEvent> events;
    auto add = [&](int scale, double start, double length, double amplitude) {
        // The last bar is cut at `duration`.
        const double end = std::min(start + length, duration);
        if (scale < cfg.n_scales && end - start > 1e-9) events.push_back({scale, start, end - start, amplitude});
    };
    const int n_bars = static_cast<int>(std::ceil(duration / kBar - 1e-9));
    for (int bar = 0; bar < n_bars; ++bar) {
        const auto& chord = chords[static_cast<std::size_t>(bar % 4)];
        const double t0 = bar * kBar;
        // Sustained harmony: the chord root and fifth.
        add(kRoot + chord[0], t0, kBar, 0.35);
        add(kRoot + chord[2], t0, kBar, 0.25);
        // Melody: arpeggio an octave up, two 0.1 s frames per note.
        for (int step = 0; step < 8; ++step) {
            const int degree = chord[static_cast<std::size_t>(arpeggio[static_cast<std::size_t>(step)])];
            add(kRoot + 12 + degree, t0 + step * kStep, kStep, 0.6);
        }
    }
    return events;
}

std::string random_english_text(std::size_t n_words, std::uint64_t seed) {
    Rng rng(seed);
    std::string text;
    for (std::size_t i = 0; i < n_words; ++i) {
        if (i > 0) text += ' ';
        text += kEnglishWords[static_cast<std::size_t>(uniform_below(rng, kEnglishWords.size()))];
    }
    return text;
}

SampleBuffer gen_morse_corpus(double duration, double wpm, double carrier_hz, std::uint64_t seed, int sample_rate) {
    require(std::isfinite(duration) && duration > 0.0, ErrorCode::InvalidArgument, "duration must be > 0");
    require(std::isfinite(wpm) && wpm > 0.0, ErrorCode::InvalidArgument, "wpm must be > 0");
    // One PARIS word is 50 units; draw extra words so the keying outlasts `duration`.
    const double unit = 1.2 / wpm;
    auto n_words = static_cast<std::size_t>(std::ceil(duration / (50.0 * unit))) + 1;
    std::string text = random_english_text(n_words, seed);
    while (true) {
        long long units = 0;
        for (const auto& [on, n] : morse_timing(text)) units += n;
        if (static_cast<double>(units) * unit >= duration) break;
        n_words *= 2;
        text = random_english_text(n_words, seed);
    }
    SampleBuffer buf = gen_morse(text, wpm, carrier_hz, sample_rate);
    buf.samples.resize(static_cast<std::size_t>(std::llround(duration * sample_rate)));
    return buf;
}

}  // namespace een
