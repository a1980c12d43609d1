#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace coughlab::nn {

enum class Activation { None, Relu };

struct Conv2D {
    std::size_t kernel_h = 3;
    std::size_t kernel_w = 3;
    std::size_t out_channels = 1;
    std::size_t stride = 1;
    std::size_t padding = 0;
    Activation activation = Activation::None;
};

struct MaxPool {
    std::size_t h = 2;
    std::size_t w = 2;
    std::size_t stride = 2;
};

struct Flatten {};

struct FullyConnected {
    std::size_t out_dim = 1;
    Activation activation = Activation::None;
};

struct ReLU {};
struct Sigmoid {};
struct Softmax {};

/// One layer. Conv2D and FullyConnected may carry a fused ReLU, so a
/// Keras-style "Dense(512, activation='relu')" counts as a single layer.
using LayerSpec = std::variant<Conv2D, MaxPool, Flatten, FullyConnected, ReLU, Sigmoid, Softmax>;

/// Activation shape of a single sample. Flat tensors have h = w = 1.
struct Shape {
    std::size_t c = 0;
    std::size_t h = 0;
    std::size_t w = 0;
    bool flat = false;

    std::size_t size() const { return c * h * w; }
    bool operator==(const Shape&) const = default;
};

std::string to_string(const Shape& s);

struct ModelSpec {
    Shape input;
    std::vector<LayerSpec> layers;
};

/// Thrown when layer `index` cannot accept its predecessor's output.
class ShapeError : public std::runtime_error {
public:
    ShapeError(std::size_t index, const std::string& what)
        : std::runtime_error("layer " + std::to_string(index) + ": " + what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// Output shape of every layer (entry i is the output of layer i).
std::vector<Shape> infer_shapes(const ModelSpec& spec);
Shape output_shape(const ModelSpec& spec);
Shape layer_output(const LayerSpec& layer, const Shape& in, std::size_t index);

bool has_params(const LayerSpec& layer);
/// Weight and bias element counts for a layer given its input shape.
std::pair<std::size_t, std::size_t> param_sizes(const LayerSpec& layer, const Shape& in);
std::size_t param_count(const ModelSpec& spec);

/// True when layer `index` is followed by a ReLU (fused or standalone).
bool feeds_relu(const ModelSpec& spec, std::size_t index);

std::string layer_name(const LayerSpec& layer);

nlohmann::json to_json(const LayerSpec& layer);
LayerSpec layer_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ModelSpec& spec);
ModelSpec spec_from_json(const nlohmann::json& j);

/// VGG19 feature extractor and classifier as a layer list (3x224x224 by
/// default): 16 fused conv+relu layers in five pooled blocks, then
/// FC 4096, FC 4096, FC 1000, Softmax.
ModelSpec vgg19_spec(std::size_t channels = 3, std::size_t height = 224, std::size_t width = 224);

}  // namespace coughlab::nn
