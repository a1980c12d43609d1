#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "coughlab/nn/kernels.hpp"
#include "coughlab/nn/spec.hpp"
#include "coughlab/rng.hpp"

namespace coughlab::nn {

template <class T>
struct LayerParams {
    std::vector<std::size_t> weight_shape;
    std::vector<T> weight;
    std::vector<T> bias;

    bool empty() const { return weight.empty() && bias.empty(); }
};

/// One entry per layer of the spec; parameter-free layers hold empty entries.
template <class T>
using ParamSet = std::vector<LayerParams<T>>;

struct ModelState {
    ModelSpec spec;
    ParamSet<float> params;
    std::vector<bool> trainable;
    nlohmann::json provenance = nlohmann::json::object();
    std::uint64_t seed = 0;

    /// Shape chaining, parameter shapes, and finiteness. Throws on violation.
    void validate() const;
    std::size_t parameter_count() const;
};

/// He-uniform for layers feeding a ReLU, Glorot-uniform otherwise; zero biases.
LayerParams<float> init_layer(const LayerSpec& layer, const Shape& in, bool relu_next, SplitMix64& rng);
ModelState init_model(const ModelSpec& spec, std::uint64_t seed);

/// Per-layer outputs recorded by forward() for backward().
template <class T>
struct Trace {
    std::size_t batch = 0;
    std::vector<T> input;
    std::vector<std::vector<T>> outputs;
    std::vector<std::vector<std::size_t>> argmax;
};

/// Kernel family used by the engine (parallel by default).
void set_backend(kernels::Backend backend);
kernels::Backend backend();

template <class T>
std::vector<T> forward(const ModelSpec& spec, const ParamSet<T>& params, std::span<const T> input,
                       std::size_t batch, Trace<T>* trace = nullptr);

/// Backpropagates `grad` (gradient w.r.t. the output of layer `from_layer`)
/// down to the input. Parameter gradients are produced only for trainable
/// layers; frozen layers still pass gradients upstream.
template <class T>
void backward(const ModelSpec& spec, const ParamSet<T>& params, const Trace<T>& trace, std::span<const T> grad,
              std::size_t from_layer, const std::vector<bool>& trainable, ParamSet<T>& grads,
              std::vector<T>* input_grad);

template <class T>
struct LossGrad {
    double loss = 0.0;
    std::vector<T> output;
    ParamSet<T> grads;
    std::vector<T> input_grad;
};

/// Mean loss and its gradients. A Sigmoid head uses binary cross-entropy
/// (labels 0/1), a Softmax head categorical cross-entropy (labels are class
/// indices). The gradient enters at the head's logits: (p - y) / batch.
template <class T>
LossGrad<T> loss_gradients(const ModelSpec& spec, const ParamSet<T>& params, const std::vector<bool>& trainable,
                           std::span<const T> input, std::span<const int> labels, std::size_t batch,
                           bool want_input_grad = false);

template <class T>
double loss_value(const ModelSpec& spec, std::span<const T> output, std::span<const int> labels,
                  std::size_t batch);

std::vector<float> predict(const ModelState& state, std::span<const float> input, std::size_t batch);

ParamSet<double> to_double(const ParamSet<float>& params);

}  // namespace coughlab::nn
