#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vlab/rng.hpp"
#include "vlab/tensor.hpp"

namespace vlab::nn {

enum class Activation { Identity, Relu, Tanh, Sigmoid };

Activation activation_from_string(const std::string& name);
std::string to_string(Activation a);

/// Fully connected layer: y = act(x * W + b), W is (in x out).
struct DenseLayer {
    Tensor weights;
    Tensor bias;
    Activation activation = Activation::Identity;

    std::size_t in_dim() const { return weights.rows(); }
    std::size_t out_dim() const { return weights.cols(); }
};

/// Plain multi-layer perceptron; layers chain input_dim -> ... -> output_dim.
struct Mlp {
    std::vector<DenseLayer> layers;

    std::size_t input_dim() const;
    std::size_t output_dim() const;
    std::size_t parameter_count() const;

    /// Pointers to every parameter tensor, weights then bias per layer.
    std::vector<Tensor*> parameters();
    std::vector<const Tensor*> parameters() const;
};

/// Glorot-uniform weights (+-sqrt(6/(fan_in+fan_out))), zero biases.
Mlp make_mlp(const std::vector<std::size_t>& dims, const std::vector<Activation>& activations,
             Rng& rng);

/// Per-layer values recorded by forward() for the matching backward().
struct ForwardCache {
    std::vector<Tensor> inputs;          // input of each layer
    std::vector<Tensor> pre_activations; // x*W+b of each layer
    std::uint64_t net_tag = 0;           // identity of the net that produced this cache
};

struct Gradients {
    std::vector<Tensor> weights; // one per layer
    std::vector<Tensor> bias;
    Tensor input; // gradient w.r.t. the batch input

    std::vector<Tensor*> parameters();
};

Tensor forward(const Mlp& net, const Tensor& x, ForwardCache* cache = nullptr);

/// Backpropagates grad_out (batch x out) through the cached forward pass.
/// Gradients are sums over the batch; callers that want means divide by the
/// batch size in grad_out itself.
Gradients backward(const Mlp& net, const ForwardCache& cache, const Tensor& grad_out);

/// Adam with bias correction. Moment accumulators mirror parameter shapes.
struct AdamState {
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    long step_count = 0;
    std::vector<Tensor> m;
    std::vector<Tensor> v;

    static AdamState create(const std::vector<Tensor*>& params, double lr = 1e-3);
};

/// One optimizer step. Throws TrainError on non-finite gradients, naming the
/// offending parameter index.
void optimizer_step(AdamState& state, const std::vector<Tensor*>& params,
                    const std::vector<const Tensor*>& grads);

} // namespace vlab::nn
