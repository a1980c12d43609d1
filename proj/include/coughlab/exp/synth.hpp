#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "coughlab/exp/config.hpp"
#include "coughlab/nn/train.hpp"
#include "coughlab/rng.hpp"

namespace coughlab::exp {

struct SynthCorpus {
    std::filesystem::path healthy_manifest;
    std::filesystem::path covid_manifest;
    std::filesystem::path noncough_manifest;
    std::size_t healthy_files = 0;
    std::size_t covid_files = 0;
    std::size_t noncough_files = 0;
};

/// Band-limited noise burst: a sum of random-phase partials inside
/// [center - width/2, center + width/2] under a fast-attack, decaying
/// envelope with the given peak amplitude.
std::vector<float> noise_burst(SplitMix64& rng, int sample_rate, double seconds, double center_hz,
                               double width_hz, double peak);

enum class NonCoughKind { Tone, Chirp, Harmonic };

std::vector<float> noncough_sound(SplitMix64& rng, int sample_rate, double seconds, NonCoughKind kind);

/// One clip of `clip_s` seconds: low background noise with the sound placed
/// at `onset_s`.
std::vector<float> place_in_clip(SplitMix64& rng, std::span<const float> sound, int sample_rate, double clip_s,
                                 double onset_s, double noise_level);

/// Writes healthy/, covid/ and noncough/ WAV folders plus one manifest per
/// class under `out_dir`. Healthy subjects are "h000".., patients "c000"..;
/// patient bursts use the healthy band shifted by spectral_shift_hz.
SynthCorpus generate_corpus(const SynthConfig& cfg, const std::filesystem::path& out_dir);

/// 10-class (configurable) image task standing in for large-scale
/// pretraining: class k is a noisy grating at angle pi*k/classes, values
/// in [0, 1].
nn::Dataset proxy_images(std::size_t classes, std::size_t per_class, const nn::Shape& shape, std::uint64_t seed);

}  // namespace coughlab::exp
