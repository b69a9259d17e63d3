#pragma once

// Audio ingestion: WAV decoding and the scale-time-volume encoding.
//
// The encoding pipeline is
//   samples -> non-overlapping Hann frames -> power spectrum
//           -> semitone scale bins -> per-file dB normalization -> integer volume.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace een {

struct SampleBuffer {
    std::vector<double> samples;
    int sample_rate = 0;

    double duration() const {
        return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate : 0.0;
    }
};

struct EncodeConfig {
    int n_scales = 84;
    double f0 = 64.0;
    double frame_sec = 0.1;
    int vmax = 10;
    double db_floor = -60.0;
    int activity_min = 1;

    /// Throws InvalidArgument when an invariant is violated.
    void validate() const;

    double center_hz(int scale) const;
    double lower_edge_hz(int scale) const;
    double upper_edge_hz(int scale) const;
    /// Lowest sample rate whose Nyquist frequency covers the top scale bin.
    double min_sample_rate() const;

    bool operator==(const EncodeConfig&) const = default;
};

struct Pixel {
    int scale = 0;
    int time = 0;
    int volume = 0;

    bool operator==(const Pixel&) const = default;
};

/// Sparse grid of active pixels, kept sorted by (scale, time).
class ScaleTimeGrid {
public:
    ScaleTimeGrid() = default;
    ScaleTimeGrid(EncodeConfig config, int n_frames, std::vector<Pixel> pixels);

    const EncodeConfig& config() const { return config_; }
    int n_scales() const { return config_.n_scales; }
    int n_frames() const { return n_frames_; }
    std::span<const Pixel> pixels() const { return pixels_; }
    std::size_t size() const { return pixels_.size(); }
    bool empty() const { return pixels_.empty(); }

    /// Volume at (scale, time), or nullopt when the cell is inactive.
    std::optional<int> volume_at(int scale, int time) const;

    bool operator==(const ScaleTimeGrid&) const = default;

private:
    EncodeConfig config_;
    int n_frames_ = 0;
    std::vector<Pixel> pixels_;
};

struct Spectrogram {
    Eigen::MatrixXd power;  // frames x (fft_size / 2 + 1)
    int sample_rate = 0;
    int frame_length = 0;
    int fft_size = 0;

    double bin_hz() const { return static_cast<double>(sample_rate) / fft_size; }
};

SampleBuffer decode_audio(const std::filesystem::path& path, const EncodeConfig& cfg = {});
SampleBuffer decode_wav_bytes(std::span<const std::uint8_t> bytes, const EncodeConfig& cfg = {});

/// Writes 16-bit PCM mono; samples are clamped to [-1, 1].
void write_wav(const std::filesystem::path& path, const SampleBuffer& buf);
std::vector<std::uint8_t> encode_wav_pcm16(const SampleBuffer& buf);

Spectrogram compute_spectrogram(const SampleBuffer& buf, const EncodeConfig& cfg);

/// Sums spectrogram power into semitone bins; result is n_scales x frames.
Eigen::MatrixXd map_to_scales(const Spectrogram& spec, const EncodeConfig& cfg);

/// Scale index whose half-open band contains `hz`, if any.
std::optional<int> scale_of_frequency(double hz, const EncodeConfig& cfg);

ScaleTimeGrid normalize_volume(const Eigen::MatrixXd& raw, const EncodeConfig& cfg);

/// Full encoding: spectrogram, scale mapping, normalization.
ScaleTimeGrid encode(const SampleBuffer& buf, const EncodeConfig& cfg);

}  // namespace een
