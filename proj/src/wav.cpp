#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>

#include "een/error.hpp"
#include "een/ingest.hpp"

namespace een {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint32_t read_u32(std::span<const std::uint8_t> b, std::size_t at) {
    return static_cast<std::uint32_t>(b[at]) | static_cast<std::uint32_t>(b[at + 1]) << 8 |
           static_cast<std::uint32_t>(b[at + 2]) << 16 | static_cast<std::uint32_t>(b[at + 3]) << 24;
}

std::uint16_t read_u16(std::span<const std::uint8_t> b, std::size_t at) {
    return static_cast<std::uint16_t>(b[at] | b[at + 1] << 8);
}

bool tag_is(std::span<const std::uint8_t> b, std::size_t at, const char* tag) {
    return std::memcmp(b.data() + at, tag, 4) == 0;
}

double decode_sample(std::span<const std::uint8_t> b, std::size_t at, std::uint16_t format, int bits) {
    if (format == kFormatFloat) {
        std::uint32_t raw = read_u32(b, at);
        float f;
        std::memcpy(&f, &raw, sizeof f);
        require(std::isfinite(f), ErrorCode::UnsupportedFormat, "non-finite float sample");
        return std::clamp(static_cast<double>(f), -1.0, 1.0);
    }
    switch (bits) {
        case 8: return (static_cast<int>(b[at]) - 128) / 128.0;
        case 16: return static_cast<std::int16_t>(read_u16(b, at)) / 32768.0;
        case 24: {
            std::int32_t v = b[at] | b[at + 1] << 8 | b[at + 2] << 16;
            if (v & 0x800000) v -= 0x1000000;
            return v / 8388608.0;
        }
        case 32: return static_cast<std::int32_t>(read_u32(b, at)) / 2147483648.0;
    }
    fail(ErrorCode::UnsupportedFormat, "unsupported bit depth");
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_tag(std::vector<std::uint8_t>& out, const char* tag) {
    out.insert(out.end(), tag, tag + 4);
}

}  // namespace

SampleBuffer decode_wav_bytes(std::span<const std::uint8_t> bytes, const EncodeConfig& cfg) {
    require(bytes.size() >= 12 && tag_is(bytes, 0, "RIFF") && tag_is(bytes, 8, "WAVE"),
            ErrorCode::UnsupportedFormat, "not a RIFF/WAVE file");

    std::uint16_t format = 0;
    int channels = 0;
    int sample_rate = 0;
    int bits = 0;
    int block_align = 0;
    bool have_fmt = false;
    std::span<const std::uint8_t> data;
    bool have_data = false;

    std::size_t pos = 12;
    while (pos + 8 <= bytes.size()) {
        const std::uint32_t size = read_u32(bytes, pos + 4);
        const std::size_t body = pos + 8;
        const std::size_t available = std::min<std::size_t>(size, bytes.size() - body);
        if (tag_is(bytes, pos, "fmt ")) {
            require(available >= 16, ErrorCode::UnsupportedFormat, "truncated fmt chunk");
            format = read_u16(bytes, body);
            channels = read_u16(bytes, body + 2);
            sample_rate = static_cast<int>(read_u32(bytes, body + 4));
            block_align = read_u16(bytes, body + 12);
            bits = read_u16(bytes, body + 14);
            if (format == kFormatExtensible) {
                require(available >= 26, ErrorCode::UnsupportedFormat, "truncated extensible fmt chunk");
                format = read_u16(bytes, body + 24);
            }
            have_fmt = true;
        } else if (tag_is(bytes, pos, "data")) {
            data = bytes.subspan(body, available);
            have_data = true;
        }
        pos = body + size + (size & 1u);
    }

    require(have_fmt && have_data, ErrorCode::UnsupportedFormat, "missing fmt or data chunk");
    require(format == kFormatPcm || format == kFormatFloat, ErrorCode::UnsupportedFormat,
            "compressed WAV codecs are not supported");
    require(format != kFormatFloat || bits == 32, ErrorCode::UnsupportedFormat, "float WAV must be 32-bit");
    require(format != kFormatPcm || bits == 8 || bits == 16 || bits == 24 || bits == 32,
            ErrorCode::UnsupportedFormat, "unsupported PCM bit depth");
    require(channels == 1 || channels == 2, ErrorCode::UnsupportedFormat, "only mono and stereo are supported");
    const int bytes_per_sample = bits / 8;
    require(block_align == bytes_per_sample * channels, ErrorCode::UnsupportedFormat, "inconsistent block alignment");
    require(sample_rate > 0, ErrorCode::UnsupportedFormat, "zero sample rate");
    require(sample_rate >= cfg.min_sample_rate(), ErrorCode::SampleRateTooLow,
            "sample rate " + std::to_string(sample_rate) + " Hz is below the required " +
                std::to_string(static_cast<int>(std::ceil(cfg.min_sample_rate()))) + " Hz");

    SampleBuffer buf;
    buf.sample_rate = sample_rate;
    const std::size_t n = data.size() / static_cast<std::size_t>(block_align);
    buf.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t at = i * static_cast<std::size_t>(block_align);
        double v = decode_sample(data, at, format, bits);
        if (channels == 2) v = 0.5 * (v + decode_sample(data, at + bytes_per_sample, format, bits));
        buf.samples[i] = v;
    }
    return buf;
}

SampleBuffer decode_audio(const std::filesystem::path& path, const EncodeConfig& cfg) {
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), ErrorCode::Io, "cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return decode_wav_bytes(bytes, cfg);
}

std::vector<std::uint8_t> encode_wav_pcm16(const SampleBuffer& buf) {
    require(buf.sample_rate > 0, ErrorCode::InvalidArgument, "sample rate must be positive");
    const auto data_bytes = static_cast<std::uint32_t>(buf.samples.size() * 2);
    std::vector<std::uint8_t> out;
    out.reserve(44 + data_bytes);
    put_tag(out, "RIFF");
    put_u32(out, 36 + data_bytes);
    put_tag(out, "WAVE");
    put_tag(out, "fmt ");
    put_u32(out, 16);
    put_u16(out, kFormatPcm);
    put_u16(out, 1);
    put_u32(out, static_cast<std::uint32_t>(buf.sample_rate));
    put_u32(out, static_cast<std::uint32_t>(buf.sample_rate) * 2);
    put_u16(out, 2);
    put_u16(out, 16);
    put_tag(out, "data");
    put_u32(out, data_bytes);
    for (double x : buf.samples) {
        const auto v = static_cast<std::int16_t>(std::lround(std::clamp(x, -1.0, 1.0) * 32767.0));
        put_u16(out, static_cast<std::uint16_t>(v));
    }
    return out;
}

void write_wav(const std::filesystem::path& path, const SampleBuffer& buf) {
    const auto bytes = encode_wav_pcm16(buf);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        require(static_cast<bool>(out), ErrorCode::Io, "cannot write " + tmp);
        out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        require(static_cast<bool>(out), ErrorCode::Io, "write failed for " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace een
