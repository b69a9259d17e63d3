#include "een/ingest.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>

#include <unsupported/Eigen/FFT>

#include "een/error.hpp"

namespace een {

void EncodeConfig::validate() const {
    require(n_scales >= 2, ErrorCode::InvalidArgument, "n_scales must be >= 2");
    require(std::isfinite(f0) && f0 > 0.0, ErrorCode::InvalidArgument, "f0 must be > 0");
    require(std::isfinite(frame_sec) && frame_sec > 0.0, ErrorCode::InvalidArgument, "frame_sec must be > 0");
    require(vmax >= 1, ErrorCode::InvalidArgument, "vmax must be >= 1");
    require(std::isfinite(db_floor) && db_floor < 0.0, ErrorCode::InvalidArgument, "db_floor must be < 0");
    require(activity_min >= 0 && activity_min <= vmax, ErrorCode::InvalidArgument,
            "activity_min must lie in [0, vmax]");
}

double EncodeConfig::center_hz(int scale) const {
    return f0 * std::exp2(scale / 12.0);
}

double EncodeConfig::lower_edge_hz(int scale) const {
    return f0 * std::exp2((scale - 0.5) / 12.0);
}

double EncodeConfig::upper_edge_hz(int scale) const {
    return f0 * std::exp2((scale + 0.5) / 12.0);
}

double EncodeConfig::min_sample_rate() const {
    return 2.0 * upper_edge_hz(n_scales - 1);
}

ScaleTimeGrid::ScaleTimeGrid(EncodeConfig config, int n_frames, std::vector<Pixel> pixels)
    : config_(config), n_frames_(n_frames), pixels_(std::move(pixels)) {
    require(n_frames_ >= 0, ErrorCode::InvalidArgument, "negative frame count");
    std::sort(pixels_.begin(), pixels_.end(), [](const Pixel& a, const Pixel& b) {
        return a.scale != b.scale ? a.scale < b.scale : a.time < b.time;
    });
    for (std::size_t i = 0; i < pixels_.size(); ++i) {
        const Pixel& p = pixels_[i];
        require(p.scale >= 0 && p.scale < config_.n_scales, ErrorCode::InvalidArgument, "pixel scale out of range");
        require(p.time >= 0 && p.time < n_frames_, ErrorCode::InvalidArgument, "pixel time out of range");
        require(p.volume >= config_.activity_min && p.volume <= config_.vmax, ErrorCode::InvalidArgument,
                "pixel volume outside [activity_min, vmax]");
        if (i > 0) {
            const Pixel& q = pixels_[i - 1];
            require(q.scale != p.scale || q.time != p.time, ErrorCode::InvalidArgument, "duplicate pixel");
        }
    }
}

std::optional<int> ScaleTimeGrid::volume_at(int scale, int time) const {
    auto it = std::lower_bound(pixels_.begin(), pixels_.end(), Pixel{scale, time, 0},
                               [](const Pixel& a, const Pixel& b) {
                                   return a.scale != b.scale ? a.scale < b.scale : a.time < b.time;
                               });
    if (it != pixels_.end() && it->scale == scale && it->time == time) return it->volume;
    return std::nullopt;
}

Spectrogram compute_spectrogram(const SampleBuffer& buf, const EncodeConfig& cfg) {
    cfg.validate();
    require(!buf.samples.empty(), ErrorCode::EmptyInput, "empty sample buffer");
    require(buf.sample_rate > 0, ErrorCode::InvalidArgument, "sample rate must be positive");

    const auto frame_len = static_cast<std::size_t>(std::llround(cfg.frame_sec * buf.sample_rate));
    require(frame_len >= 1, ErrorCode::InvalidArgument, "frame shorter than one sample");
    const std::size_t fft_size = std::bit_ceil(frame_len);
    const std::size_t n_frames = (buf.samples.size() + frame_len - 1) / frame_len;
    const std::size_t n_bins = fft_size / 2 + 1;

    std::vector<double> window(frame_len, 1.0);
    if (frame_len > 1) {
        for (std::size_t n = 0; n < frame_len; ++n)
            window[n] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * n / (frame_len - 1));
    }

    Spectrogram out;
    out.sample_rate = buf.sample_rate;
    out.frame_length = static_cast<int>(frame_len);
    out.fft_size = static_cast<int>(fft_size);
    out.power.resize(static_cast<Eigen::Index>(n_frames), static_cast<Eigen::Index>(n_bins));

    Eigen::FFT<double> fft;
    fft.SetFlag(Eigen::FFT<double>::HalfSpectrum);
    std::vector<double> frame(fft_size);
    std::vector<std::complex<double>> spectrum;
    for (std::size_t f = 0; f < n_frames; ++f) {
        std::fill(frame.begin(), frame.end(), 0.0);
        const std::size_t begin = f * frame_len;
        const std::size_t end = std::min(begin + frame_len, buf.samples.size());
        for (std::size_t i = begin; i < end; ++i) frame[i - begin] = buf.samples[i] * window[i - begin];
        fft.fwd(spectrum, frame);
        for (std::size_t k = 0; k < n_bins; ++k)
            out.power(static_cast<Eigen::Index>(f), static_cast<Eigen::Index>(k)) = std::norm(spectrum[k]);
    }
    return out;
}

std::optional<int> scale_of_frequency(double hz, const EncodeConfig& cfg) {
    if (!(hz > 0.0)) return std::nullopt;
    const double position = 12.0 * std::log2(hz / cfg.f0) + 0.5;
    const double index = std::floor(position);
    if (index < 0.0 || index >= cfg.n_scales) return std::nullopt;
    return static_cast<int>(index);
}

Eigen::MatrixXd map_to_scales(const Spectrogram& spec, const EncodeConfig& cfg) {
    cfg.validate();
    const Eigen::Index n_frames = spec.power.rows();
    Eigen::MatrixXd raw = Eigen::MatrixXd::Zero(cfg.n_scales, n_frames);
    const double bin_hz = spec.fft_size > 0 ? spec.bin_hz() : 0.0;
    for (Eigen::Index k = 0; k < spec.power.cols(); ++k) {
        const auto scale = scale_of_frequency(static_cast<double>(k) * bin_hz, cfg);
        if (!scale) continue;
        raw.row(*scale) += spec.power.col(k).transpose();
    }
    return raw;
}

ScaleTimeGrid normalize_volume(const Eigen::MatrixXd& raw, const EncodeConfig& cfg) {
    cfg.validate();
    require(raw.rows() == cfg.n_scales, ErrorCode::InvalidArgument, "power grid has wrong number of scales");
    const double p_max = raw.size() > 0 ? raw.maxCoeff() : 0.0;
    require(p_max > 0.0, ErrorCode::AllSilent, "no positive power in the input");

    std::vector<Pixel> pixels;
    for (Eigen::Index s = 0; s < raw.rows(); ++s) {
        for (Eigen::Index t = 0; t < raw.cols(); ++t) {
            const double p = raw(s, t);
            int volume = 0;
            if (p > 0.0) {
                const double db = std::clamp(10.0 * std::log10(p / p_max), cfg.db_floor, 0.0);
                const double level = (db - cfg.db_floor) / -cfg.db_floor * cfg.vmax;
                volume = static_cast<int>(std::floor(level + 0.5));
            }
            if (volume >= cfg.activity_min)
                pixels.push_back({static_cast<int>(s), static_cast<int>(t), volume});
        }
    }
    return ScaleTimeGrid(cfg, static_cast<int>(raw.cols()), std::move(pixels));
}

ScaleTimeGrid encode(const SampleBuffer& buf, const EncodeConfig& cfg) {
    const Spectrogram spec = compute_spectrogram(buf, cfg);
    return normalize_volume(map_to_scales(spec, cfg), cfg);
}

}  // namespace een
