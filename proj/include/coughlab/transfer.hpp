#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coughlab/folds.hpp"
#include "coughlab/nn/model.hpp"
#include "coughlab/nn/train.hpp"

namespace coughlab::transfer {

/// Which layers keep trainable = true after surgery.
enum class FreezePolicy {
    None,        // everything trains
    Retained,    // layers copied from the source model are frozen
    AllButHead,  // only the new head trains
};

std::string freeze_name(FreezePolicy policy);
FreezePolicy parse_freeze(const std::string& name);

struct BlockInsert {
    /// Layer index the block is inserted before; nullopt means "before the
    /// Flatten layer".
    std::optional<std::size_t> position;
    std::vector<nn::LayerSpec> layers;
};

struct TransferPlan {
    std::size_t replace_tail = 4;
    std::vector<nn::LayerSpec> head;
    std::optional<BlockInsert> insert_block;
    FreezePolicy freeze = FreezePolicy::None;
    nn::TrainConfig train_cfg;
    bool warm_start = false;
};

/// FC(h1, relu), FC(h2, relu), FC(1), Sigmoid.
std::vector<nn::LayerSpec> binary_head(std::size_t hidden1 = 512, std::size_t hidden2 = 50);
/// `convs` x Conv2D(3x3, channels, stride 1, pad 1, relu) followed by MaxPool 2x2.
std::vector<nn::LayerSpec> conv_block(std::size_t channels, std::size_t convs = 4);

std::size_t flatten_position(const nn::ModelSpec& spec);
/// Channel count of the activation entering layer `position`.
std::size_t channels_at(const nn::ModelSpec& spec, std::size_t position);

/// Spec-level surgery: drop the last `drop` layers and append `head`.
nn::ModelSpec replace_head(const nn::ModelSpec& spec, std::size_t drop, std::span<const nn::LayerSpec> head);

/// Drops the trailing `drop` layers and appends `head` with fresh weights.
/// Retained weights are copied bit-for-bit.
nn::ModelState replace_head(const nn::ModelState& state, std::size_t drop, std::span<const nn::LayerSpec> head,
                            std::uint64_t seed);

/// Inserts `block` before layer `position` with fresh weights.
nn::ModelState insert_block(const nn::ModelState& state, std::size_t position, std::span<const nn::LayerSpec> block,
                            std::uint64_t seed);

/// Removes `count` layers starting at `position` (inverse of insert_block).
nn::ModelState remove_block(const nn::ModelState& state, std::size_t position, std::size_t count);

/// Applies the plan's block insertion and head replacement in one step, then
/// its freeze policy. Layer roles ("retained", "block", "head") are recorded
/// in provenance.
nn::ModelState derive(const nn::ModelState& source, const TransferPlan& plan, std::uint64_t seed);

void apply_freeze(nn::ModelState& state, FreezePolicy policy);

/// Per-fold datasets (index = fold).
struct FoldData {
    std::vector<nn::Dataset> folds;
    nn::Dataset union_of(std::span<const std::size_t> fold_ids) const;
};

struct BaseResult {
    nn::ModelState state;
    nn::Metrics test;
    std::vector<nn::EpochStats> history;
};

/// Head replacement on the pretrained model, trained on the plan's train
/// folds, validated on its val folds, scored on its test folds.
BaseResult build_base(const nn::ModelState& pretrained, const FoldData& data, const folds::SplitPlan& split,
                      const TransferPlan& plan, std::uint64_t seed);

struct GapPoint {
    std::size_t folds_used = 0;
    double h2c_accuracy = 0.0;
    double reference_accuracy = 0.0;
    double gap = 0.0;
};

struct GapSeries {
    std::vector<GapPoint> points;
};

struct IncrementalResult {
    GapSeries gaps;
    std::vector<nn::ModelState> checkpoints;
    std::vector<nn::Metrics> metrics;
};

/// Trains the derived model on the cumulative fold sets of `schedule` and
/// scores every step on the split's test folds. Cold mode restarts each step
/// from the same derived initialization; warm mode continues from the
/// previous step.
IncrementalResult incremental_transfer(const nn::ModelState& source, const folds::IncrementSchedule& schedule,
                                       const FoldData& data, const folds::SplitPlan& split, const TransferPlan& plan,
                                       double reference_accuracy, std::uint64_t seed);

/// metrics[i][j]: model i on test set j. Empty model list gives an empty matrix.
std::vector<std::vector<nn::Metrics>> evaluate_cross(std::span<const nn::ModelState> models,
                                                     std::span<const nn::Dataset> test_sets);

struct Summary {
    double mean = 0.0;
    double sd = 0.0;  // sample standard deviation; 0 for fewer than two values
    std::size_t n = 0;
};

Summary summarize(std::span<const double> values);

}  // namespace coughlab::transfer
