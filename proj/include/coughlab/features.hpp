#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace coughlab::feat {

struct FeatureConfig {
    double window_s = 0.3917;
    int sample_rate = 44100;
    std::size_t n_fft = 1024;
    std::size_t hop = 256;
    std::size_t n_mels = 64;
    std::size_t n_mfcc = 20;
    double fmin = 0.0;
    double fmax = 22050.0;
    double log_eps = 1e-10;
    std::size_t input_h = 320;
    std::size_t input_w = 320;

    /// Number of samples a signal is fit to: floor(window_s * sample_rate).
    std::size_t window_samples() const;
    std::size_t n_frames() const;
    /// Throws std::invalid_argument describing the first violated constraint.
    void validate() const;
};

enum class FeatureKind : std::uint8_t { LogMel = 0, Mfcc = 1 };

std::string_view kind_name(FeatureKind kind);
FeatureKind parse_kind(std::string_view name);

/// Row-major matrix of doubles.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), values(r * c, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return values[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
    std::span<const double> row(std::size_t r) const { return {values.data() + r * cols, cols}; }
};

/// n_mels x (n_fft/2 + 1) triangular weights, each row peak-normalized to 1.
struct MelFilterbank {
    Matrix weights;
};

struct FeatureImage {
    Matrix values;
    FeatureKind kind = FeatureKind::LogMel;
    bool normalized = false;

    std::size_t height() const { return values.rows; }
    std::size_t width() const { return values.cols; }
};

double hz_to_mel(double hz);
double mel_to_hz(double mel);

/// Zero-pads at the end or truncates to exactly cfg.window_samples().
std::vector<float> fit_to_window(std::span<const float> signal, const FeatureConfig& cfg);

MelFilterbank mel_filterbank(const FeatureConfig& cfg);

/// Power spectrogram (Hann window, no centering): n_frames x (n_fft/2 + 1).
Matrix power_spectrogram(std::span<const float> signal, std::size_t n_fft, std::size_t hop);

/// log(mel power + eps), shape n_mels x n_frames.
FeatureImage logmel(std::span<const float> signal, const FeatureConfig& cfg);
FeatureImage logmel(std::span<const float> signal, const FeatureConfig& cfg, const MelFilterbank& bank);

/// Orthonormal DCT-II along the mel axis, first n_mfcc rows kept.
FeatureImage mfcc(std::span<const float> signal, const FeatureConfig& cfg);
FeatureImage mfcc_from_logmel(const FeatureImage& logmel_image, std::size_t n_mfcc);

std::vector<double> dct2_ortho(std::span<const double> x);
std::vector<double> idct2_ortho(std::span<const double> c);

/// Min-max normalize to [0, 1] (constant images become all zero), then
/// bilinear resize (corner-aligned) to input_h x input_w.
FeatureImage render_input(const FeatureImage& img, const FeatureConfig& cfg);
Matrix bilinear_resize(const Matrix& src, std::size_t out_h, std::size_t out_w);

/// fit_to_window -> logmel/mfcc -> render_input.
FeatureImage featurize(std::span<const float> signal, FeatureKind kind, const FeatureConfig& cfg,
                       const MelFilterbank& bank);

/// Single-channel image repeated into `channels` planes, as float CHW.
std::vector<float> to_model_input(const FeatureImage& img, std::size_t channels);

class FeatureFileError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// "CFIM" | u32 H | u32 W | u8 kind | H*W float32 LE, row-major.
void write_feature_file(const std::filesystem::path& path, const FeatureImage& img);
FeatureImage read_feature_file(const std::filesystem::path& path);

}  // namespace coughlab::feat
