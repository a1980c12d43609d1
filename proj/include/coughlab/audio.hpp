#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coughlab::audio {

enum class Label { HealthyCough, CovidCough, NonCough, Unlabeled };

/// Manifest token for a label ("cough_healthy", "cough_covid", ...).
std::string_view label_token(Label label);
/// Inverse of label_token. Throws std::invalid_argument on an unknown token.
Label parse_label(std::string_view token);

inline bool is_cough(Label label) {
    return label == Label::HealthyCough || label == Label::CovidCough;
}

/// Mono recording. Samples lie in [-1, 1].
struct AudioClip {
    std::vector<float> samples;
    int sample_rate = 0;
    std::string subject_id;
    Label label = Label::Unlabeled;
    std::string source;

    double duration() const {
        return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate : 0.0;
    }
};

struct ClipRecord {
    std::filesystem::path path;
    std::string subject_id;
    Label label = Label::Unlabeled;
    std::string source;
};

enum class WavErrc { Io, MalformedHeader, UnsupportedCodec, NoSamples };

class WavError : public std::runtime_error {
public:
    WavError(WavErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    WavErrc code() const noexcept { return code_; }

private:
    WavErrc code_;
};

class ManifestError : public std::runtime_error {
public:
    ManifestError(std::size_t row, const std::string& what)
        : std::runtime_error(what), row_(row) {}
    /// 1-based data row (header excluded); 0 for header-level problems.
    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

/// Reads RIFF/WAVE: PCM 8/16/24/32-bit integer or 32-bit float, 1-2 channels.
/// Integers are scaled by the format's maximum magnitude; stereo is averaged.
AudioClip load_wav(const std::filesystem::path& path);
AudioClip decode_wav(std::span<const unsigned char> bytes);

enum class WavEncoding { Pcm16, Float32 };
void write_wav(const std::filesystem::path& path, std::span<const float> samples,
               int sample_rate, WavEncoding encoding = WavEncoding::Pcm16, int channels = 1);

/// Writes interleaved multi-channel frames as-is (used for stereo fixtures).
void write_wav_interleaved(const std::filesystem::path& path, std::span<const float> interleaved,
                           int sample_rate, int channels, WavEncoding encoding);

inline constexpr int kTargetRate = 44100;

/// Band-limited rational resampler: polyphase windowed sinc, Kaiser window
/// (beta 8.6), 64 zero crossings per side. Output length is
/// round(n * target / source).
AudioClip resample(const AudioClip& clip, int target_rate = kTargetRate);
std::vector<float> resample(std::span<const float> samples, int source_rate, int target_rate);

/// CSV with header path,subject_id,label,source. Relative paths resolve
/// against the manifest's directory.
std::vector<ClipRecord> load_manifest(const std::filesystem::path& path);
void write_manifest(const std::filesystem::path& path, std::span<const ClipRecord> records);

/// load_wav + metadata + resample to target_rate.
AudioClip ingest(const ClipRecord& record, int target_rate = kTargetRate);

}  // namespace coughlab::audio
