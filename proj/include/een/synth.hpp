#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "een/ingest.hpp"

namespace een {

struct ToneEvent {
    int scale = 0;
    double start = 0.0;     // seconds
    double duration = 0.0;  // seconds
    double amplitude = 1.0;
};

/// Sum of sinusoids at each event's scale-bin centre with 5 ms linear fades,
/// renormalized to a peak of 1.
SampleBuffer gen_tone_corpus(const std::vector<ToneEvent>& events, const EncodeConfig& cfg, int sample_rate);

/// International Morse code for one character ("" if unsupported).
std::string_view morse_code(char c);

/// On/off keying in Morse units (PARIS timing): dot 1, dash 3, intra-character
/// gap 1, inter-character gap 3, word gap 7. Runs of whitespace are one word gap.
std::vector<std::pair<bool, int>> morse_timing(std::string_view text);

SampleBuffer gen_morse(std::string_view text, double wpm, double carrier_hz, int sample_rate);
/// Morse keying of seeded random English text, cut to exactly `duration` seconds.
SampleBuffer gen_morse_corpus(double duration, double wpm, double carrier_hz, std::uint64_t seed, int sample_rate);

enum class NoiseKind { White, Pink };

/// White: i.i.d. uniform(-1, 1). Pink: Voss-McCartney sum of 16 held white
/// rows, rescaled to peak 1. Deterministic in the seed.
SampleBuffer gen_noise(NoiseKind kind, double duration, std::uint64_t seed, int sample_rate);

/// Structured multi-voice test corpus lasting `duration` seconds: a repeating
/// I-V-vi-IV progression (1.6 s bars) with sustained root and fifth and an
/// arpeggiated melody an octave up. Note boundaries fall on frame boundaries
/// when `duration` is a multiple of the frame length.
std::vector<ToneEvent> structured_tone_events(double duration, const EncodeConfig& cfg);

/// Random English-like text (from a fixed word list), deterministic in the seed.
std::string random_english_text(std::size_t n_words, std::uint64_t seed);

}  // namespace een
