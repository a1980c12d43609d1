#pragma once

#include <filesystem>
#include <stdexcept>

#include "coughlab/nn/model.hpp"

namespace coughlab::nn {

class CheckpointError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Writes `dir/model.json` (spec, trainable flags, provenance, seed) and
/// `dir/weights.bin`: for each parameterized layer in spec order, the weight
/// then the bias tensor, each as u32 rank, u32 dims, float32 LE row-major.
void save_checkpoint(const std::filesystem::path& dir, const ModelState& state);
ModelState load_checkpoint(const std::filesystem::path& dir);

}  // namespace coughlab::nn
