#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "coughlab/nn/model.hpp"

namespace coughlab::nn {

struct AdamConfig {
    double lr = 1e-4;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

struct RmspropConfig {
    double lr = 1e-4;
    double rho = 0.9;
    double eps = 1e-8;
};

using OptimizerConfig = std::variant<AdamConfig, RmspropConfig>;

double learning_rate(const OptimizerConfig& cfg);

/// Per-parameter running statistics, laid out like the model's ParamSet.
struct Moments {
    std::vector<std::vector<float>> weight;
    std::vector<std::vector<float>> bias;

    static Moments zeros_like(const ModelState& state);
};

/// Adam with bias correction; `t` is the 1-based step index. Layers without
/// gradients (frozen or parameter-free) are left untouched.
void adam_step(ModelState& state, const ParamSet<float>& grads, std::size_t t, const AdamConfig& cfg,
               Moments& first, Moments& second);

void rmsprop_step(ModelState& state, const ParamSet<float>& grads, const RmspropConfig& cfg, Moments& mean_square);

class Optimizer {
public:
    Optimizer(OptimizerConfig cfg, const ModelState& state);

    void step(ModelState& state, const ParamSet<float>& grads);
    std::size_t steps() const { return t_; }

private:
    OptimizerConfig cfg_;
    Moments first_;
    Moments second_;
    std::size_t t_ = 0;
};

}  // namespace coughlab::nn
