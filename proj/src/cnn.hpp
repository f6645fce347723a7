// Minimal convolutional network for binary classification: conv (cross
// correlation), relu, maxpool, flatten, dense, sigmoid. Parameters are f32;
// all activations and gradient accumulation are f64, so finite-difference
// gradient checks hold tightly and results are bit-reproducible.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ws::cnn {

enum class layer_kind { conv, relu, maxpool, flatten, dense, sigmoid };

struct layer_spec {
    layer_kind kind = layer_kind::relu;
    int out_channels = 0, kh = 0, kw = 0, stride = 1, pad = 0;  // conv
    int window = 0, pool_stride = 0;                            // maxpool
    int out_dim = 0;                                            // dense

    static layer_spec conv2d(int out_c, int kh, int kw, int stride = 1, int pad = 0);
    static layer_spec relu();
    static layer_spec maxpool(int window, int stride = 0);  // stride 0 -> window
    static layer_spec flatten();
    static layer_spec dense(int out_dim);
    static layer_spec sigmoid();

    std::string describe() const;
};

struct shape3 {
    int c = 0, h = 0, w = 0;
    int size() const { return c * h * w; }
    bool operator==(const shape3&) const = default;
};

// conv: floor((H + 2p - k) / stride) + 1; pool: floor((H - w) / stride) + 1.
// Errors when shapes do not compose (including pooling to a < 2 spatial dim,
// which collapses locality).
shape3 output_shape(const layer_spec& spec, shape3 in);

struct layer_params {
    std::vector<float> weight;  // conv: [out_c][in_c][kh][kw]; dense: [out][in]
    std::vector<float> bias;
};

struct network {
    std::vector<layer_spec> layers;
    std::vector<layer_params> params;  // parallel to layers, empty where parameterless
    shape3 input;
    std::uint64_t seed = 0;

    std::size_t parameter_count() const;
};

// validates composition, He-initializes conv/dense weights (fan-in scaled)
network build_network(std::vector<layer_spec> layers, shape3 input, std::uint64_t seed);

// "shallow": conv(8,5x5,pad 2) relu pool2 flatten dense(1) sigmoid
// "deep":    [conv(3x3,pad 1) relu pool2] x3 with 8/16/32 channels,
//            flatten dense(32) relu dense(1) sigmoid
network build_reference_net(const std::string& kind, shape3 input, std::uint64_t seed);

struct examples {
    shape3 shape;
    std::vector<float> data;  // count x shape.size(), contiguous
    std::vector<int> labels;

    std::size_t count() const { return labels.size(); }
    const float* example(std::size_t i) const {
        return data.data() + i * static_cast<std::size_t>(shape.size());
    }
};

// probabilities P(label = 1), one per example
std::vector<double> forward(const network& net, const examples& batch);

// per-layer output activations of a single example, for inspection
std::vector<std::vector<double>> forward_activations(const network& net, const float* x);

inline constexpr double PROB_CLAMP = 1e-7;

// mean binary cross-entropy with probabilities clamped to
// [PROB_CLAMP, 1 - PROB_CLAMP]
double loss(const std::vector<double>& probs, const std::vector<int>& labels);

struct gradients {
    std::vector<std::vector<double>> weight;  // parallel to network layers
    std::vector<std::vector<double>> bias;
};

// exact gradients of loss() over the batch w.r.t. every parameter
gradients backward(const network& net, const examples& batch, double* loss_out = nullptr);

struct train_config {
    int epochs = 50;
    int batch_size = 32;
    double learning_rate = 0.01;
    bool use_momentum = true;
    double momentum = 0.9;
    std::uint64_t seed = 0;
    int early_stop_patience = 10;
};

struct train_report {
    std::vector<double> train_loss;  // per epoch
    std::vector<double> val_loss;
    std::vector<double> val_accuracy;
    int best_epoch = -1;  // epoch whose parameters the network ends with
    double wall_seconds = 0.0;
};

// mini-batch SGD (optional momentum), per-(seed, epoch) shuffling, early stop
// on validation loss; restores the best-validation parameters. Divergence
// (non-finite loss) raises an error naming the epoch.
train_report train(network& net, const examples& train_set, const examples& val_set,
                   const train_config& cfg);

struct prediction {
    std::vector<int> labels;  // 1 iff probability > 0.5
    std::vector<double> probabilities;
};

prediction predict(const network& net, const examples& batch);

} // namespace ws::cnn
