#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "coughlab/features.hpp"
#include "coughlab/nn/train.hpp"
#include "coughlab/segmentation.hpp"
#include "coughlab/transfer.hpp"

namespace coughlab::exp {

class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& what)
        : std::runtime_error(field.empty() ? what : "config field '" + field + "': " + what),
          field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Parses the TOML subset used by experiment configs: `[section]` headers
/// (dotted names nest), `key = value` with strings, booleans, integers,
/// floats and single-line arrays, and `#` comments. Returns nested objects.
nlohmann::json parse_toml(std::string_view text);

struct SynthConfig {
    std::uint64_t seed = 0;
    int sample_rate = 22050;
    std::size_t healthy_subjects = 100;
    std::size_t covid_subjects = 100;
    std::size_t coughs_min = 2;
    std::size_t coughs_max = 4;
    std::size_t noncough_clips = 400;
    double clip_s = 1.0;
    double burst_min_s = 0.18;
    double burst_max_s = 0.35;
    double band_center_hz = 1200.0;
    double band_width_hz = 800.0;
    double subject_jitter_hz = 150.0;
    double spectral_shift_hz = 1500.0;
    double noise_level = 0.01;
};

struct ProxyConfig {
    std::vector<std::size_t> conv_channels{8, 16};
    std::vector<std::size_t> dense{64, 32};
    std::size_t classes = 10;
    std::size_t samples_per_class = 60;
    std::size_t epochs = 10;
    double lr = 1e-3;
    std::filesystem::path checkpoint;  // when set, used instead of training a proxy
};

struct ExperimentConfig {
    std::string name = "experiment";
    std::filesystem::path output_dir;
    std::vector<std::uint64_t> seeds;
    feat::FeatureKind feature = feat::FeatureKind::LogMel;
    std::size_t jobs = 0;

    std::string corpus = "synthetic";  // or "manifest"
    std::filesystem::path healthy_manifest, covid_manifest, noncough_manifest;
    SynthConfig synth;

    seg::SegmentationConfig segmentation;
    feat::FeatureConfig features;
    std::size_t channels = 3;

    std::uint64_t fold_seed = 0;
    std::size_t cough_cap = 450;
    std::size_t base_rotations = 10;
    std::size_t transfer_rotation = 0;

    ProxyConfig proxy;
    std::size_t replace_tail = 4;
    std::vector<std::size_t> head{512, 50};
    nn::TrainConfig i2h, i2c, h2c;
    std::size_t h2c_block_convs = 4;
    std::optional<std::size_t> h2c_block_position;
    std::optional<std::size_t> h2c_block_channels;
    transfer::FreezePolicy freeze = transfer::FreezePolicy::None;
    bool warm_start = false;

    /// Normalized view of every field, used for echoing and stage hashing.
    nlohmann::json to_json() const;
    std::filesystem::path base_dir;  // directory of the config file
};

/// Throws ConfigError naming the offending field.
ExperimentConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = ".");
ExperimentConfig load_config(const std::filesystem::path& path);

std::string optimizer_name(const nn::OptimizerConfig& cfg);

}  // namespace coughlab::exp
