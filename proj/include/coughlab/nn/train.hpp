#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "coughlab/nn/model.hpp"
#include "coughlab/nn/optim.hpp"

namespace coughlab::nn {

/// Samples stored contiguously as float CHW images with integer labels.
struct Dataset {
    Shape shape;
    std::vector<float> x;
    std::vector<int> y;

    Dataset() = default;
    explicit Dataset(Shape s) : shape(s) {}

    std::size_t size() const { return y.size(); }
    bool empty() const { return y.empty(); }
    std::span<const float> sample(std::size_t i) const { return {x.data() + i * shape.size(), shape.size()}; }
    void add(std::span<const float> image, int label);
    Dataset subset(std::span<const std::size_t> indices) const;
    Dataset concat(const Dataset& other) const;
};

struct TrainConfig {
    OptimizerConfig optimizer = AdamConfig{};
    std::size_t batch_size = 16;
    std::size_t epochs = 30;
    std::uint64_t seed = 0;
    std::optional<std::size_t> early_stop_patience;  // on validation loss; off by default
};

struct Metrics {
    double accuracy = 0.0;
    std::size_t tp = 0, tn = 0, fp = 0, fn = 0;
    double loss = 0.0;
    std::size_t count = 0;
};

struct EpochStats {
    std::size_t epoch = 0;
    double train_loss = 0.0;
    double train_accuracy = 0.0;
    double val_loss = 0.0;
    double val_accuracy = 0.0;
};

struct TrainResult {
    ModelState state;
    std::vector<EpochStats> history;
    std::size_t best_epoch = 0;
};

/// Mean binary cross-entropy; predictions are clamped to [1e-7, 1 - 1e-7].
double bce_loss(std::span<const float> pred, std::span<const float> labels);

/// Seeded mini-batch training. Returns the weights of the epoch with the best
/// validation accuracy (ties: lower validation loss, then earlier epoch).
TrainResult train(ModelState state, const Dataset& train_set, const Dataset& val_set, const TrainConfig& cfg);

/// Binary heads: class 1 iff p > threshold. Softmax heads: argmax.
Metrics evaluate(const ModelState& state, const Dataset& data, double threshold = 0.5);

/// Runs `steps` optimizer steps over consecutive mini-batches (no
/// validation, no best-weight selection).
ModelState train_steps(ModelState state, const Dataset& data, const TrainConfig& cfg, std::size_t steps);

}  // namespace coughlab::nn
