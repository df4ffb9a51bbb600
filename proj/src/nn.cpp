#include "vlab/nn.hpp"

#include <cmath>

#include "vlab/errors.hpp"
#include "vlab/linalg.hpp"

namespace vlab::nn {

Activation activation_from_string(const std::string& name) {
    if (name == "identity" || name == "linear") return Activation::Identity;
    if (name == "relu") return Activation::Relu;
    if (name == "tanh") return Activation::Tanh;
    if (name == "sigmoid") return Activation::Sigmoid;
    throw ValueError("unknown activation '" + name + "'");
}

std::string to_string(Activation a) {
    switch (a) {
        case Activation::Identity: return "identity";
        case Activation::Relu: return "relu";
        case Activation::Tanh: return "tanh";
        case Activation::Sigmoid: return "sigmoid";
    }
    return "identity";
}

namespace {

double apply_act(double z, Activation a) {
    switch (a) {
        case Activation::Identity: return z;
        case Activation::Relu: return z > 0.0 ? z : 0.0;
        case Activation::Tanh: return std::tanh(z);
        case Activation::Sigmoid: return 1.0 / (1.0 + std::exp(-z));
    }
    return z;
}

double act_derivative(double z, Activation a) {
    switch (a) {
        case Activation::Identity: return 1.0;
        case Activation::Relu: return z > 0.0 ? 1.0 : 0.0;
        case Activation::Tanh: {
            const double t = std::tanh(z);
            return 1.0 - t * t;
        }
        case Activation::Sigmoid: {
            const double s = 1.0 / (1.0 + std::exp(-z));
            return s * (1.0 - s);
        }
    }
    return 1.0;
}

std::uint64_t tag_of(const Mlp& net) {
    // cheap structural identity: pointer of the first weight buffer mixed
    // with the layer count; enough to catch stale-cache mistakes
    std::uint64_t t = net.layers.size();
    if (!net.layers.empty())
        t ^= reinterpret_cast<std::uintptr_t>(net.layers.front().weights.data());
    return t;
}

} // namespace

std::size_t Mlp::input_dim() const {
    if (layers.empty()) throw ValueError("Mlp: no layers");
    return layers.front().in_dim();
}

std::size_t Mlp::output_dim() const {
    if (layers.empty()) throw ValueError("Mlp: no layers");
    return layers.back().out_dim();
}

std::size_t Mlp::parameter_count() const {
    std::size_t n = 0;
    for (const auto& l : layers) n += l.weights.size() + l.bias.size();
    return n;
}

std::vector<Tensor*> Mlp::parameters() {
    std::vector<Tensor*> out;
    for (auto& l : layers) {
        out.push_back(&l.weights);
        out.push_back(&l.bias);
    }
    return out;
}

std::vector<const Tensor*> Mlp::parameters() const {
    std::vector<const Tensor*> out;
    for (const auto& l : layers) {
        out.push_back(&l.weights);
        out.push_back(&l.bias);
    }
    return out;
}

Mlp make_mlp(const std::vector<std::size_t>& dims, const std::vector<Activation>& activations,
             Rng& rng) {
    if (dims.size() < 2) throw ValueError("make_mlp: need at least input and output dims");
    if (activations.size() != dims.size() - 1)
        throw ValueError("make_mlp: one activation per layer required");
    Mlp net;
    for (std::size_t i = 0; i + 1 < dims.size(); ++i) {
        DenseLayer layer;
        const double limit = std::sqrt(6.0 / static_cast<double>(dims[i] + dims[i + 1]));
        layer.weights = Tensor({dims[i], dims[i + 1]});
        for (std::size_t k = 0; k < layer.weights.size(); ++k)
            layer.weights[k] = rng.uniform(-limit, limit);
        layer.bias = Tensor({dims[i + 1]});
        layer.activation = activations[i];
        net.layers.push_back(std::move(layer));
    }
    return net;
}

Tensor forward(const Mlp& net, const Tensor& x, ForwardCache* cache) {
    if (x.cols() != net.input_dim())
        throw ShapeError("forward: input width " + std::to_string(x.cols()) + " != net input " +
                         std::to_string(net.input_dim()));
    if (cache) {
        cache->inputs.clear();
        cache->pre_activations.clear();
        cache->net_tag = tag_of(net);
    }
    Tensor h = x;
    for (const auto& layer : net.layers) {
        if (cache) cache->inputs.push_back(h);
        Tensor z = matmul(h, layer.weights);
        const std::size_t rows = z.rows(), cols = z.cols();
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) z(i, j) += layer.bias[j];
        if (cache) cache->pre_activations.push_back(z);
        for (std::size_t i = 0; i < z.size(); ++i) z[i] = apply_act(z[i], layer.activation);
        h = std::move(z);
    }
    return h;
}

Gradients backward(const Mlp& net, const ForwardCache& cache, const Tensor& grad_out) {
    const std::size_t n_layers = net.layers.size();
    if (cache.inputs.size() != n_layers || cache.pre_activations.size() != n_layers ||
        cache.net_tag != tag_of(net))
        throw ValueError("backward: cache does not match this network/forward pass");
    if (grad_out.cols() != net.output_dim())
        throw ShapeError("backward: grad_out width mismatch");

    Gradients grads;
    grads.weights.resize(n_layers);
    grads.bias.resize(n_layers);

    Tensor g = grad_out;
    for (std::size_t li = n_layers; li-- > 0;) {
        const DenseLayer& layer = net.layers[li];
        const Tensor& pre = cache.pre_activations[li];
        require_same_shape(g, pre, "backward");
        // through the activation
        Tensor gz = g;
        for (std::size_t i = 0; i < gz.size(); ++i)
            gz[i] *= act_derivative(pre[i], layer.activation);
        // parameter gradients (sums over the batch)
        grads.weights[li] = matmul_tn(cache.inputs[li], gz);
        Tensor db({layer.out_dim()});
        for (std::size_t i = 0; i < gz.rows(); ++i)
            for (std::size_t j = 0; j < gz.cols(); ++j) db[j] += gz(i, j);
        grads.bias[li] = std::move(db);
        // through the linear map
        g = matmul_nt(gz, layer.weights);
    }
    grads.input = std::move(g);
    return grads;
}

std::vector<Tensor*> Gradients::parameters() {
    std::vector<Tensor*> out;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        out.push_back(&weights[i]);
        out.push_back(&bias[i]);
    }
    return out;
}

AdamState AdamState::create(const std::vector<Tensor*>& params, double lr) {
    AdamState s;
    s.learning_rate = lr;
    for (const Tensor* p : params) {
        s.m.emplace_back(p->shape());
        s.v.emplace_back(p->shape());
    }
    return s;
}

void optimizer_step(AdamState& state, const std::vector<Tensor*>& params,
                    const std::vector<const Tensor*>& grads) {
    if (params.size() != grads.size() || params.size() != state.m.size())
        throw ValueError("optimizer_step: parameter/gradient/state count mismatch");
    for (std::size_t pi = 0; pi < params.size(); ++pi) {
        if (!params[pi]->same_shape(*grads[pi]) || !params[pi]->same_shape(state.m[pi]))
            throw ShapeError("optimizer_step: shape mismatch at parameter " + std::to_string(pi));
        if (!grads[pi]->all_finite())
            throw TrainError("optimizer_step: non-finite gradient at parameter " +
                             std::to_string(pi));
    }
    state.step_count += 1;
    const double t = static_cast<double>(state.step_count);
    const double bc1 = 1.0 - std::pow(state.beta1, t);
    const double bc2 = 1.0 - std::pow(state.beta2, t);
    for (std::size_t pi = 0; pi < params.size(); ++pi) {
        Tensor& p = *params[pi];
        const Tensor& g = *grads[pi];
        Tensor& m = state.m[pi];
        Tensor& v = state.v[pi];
        for (std::size_t i = 0; i < p.size(); ++i) {
            m[i] = state.beta1 * m[i] + (1.0 - state.beta1) * g[i];
            v[i] = state.beta2 * v[i] + (1.0 - state.beta2) * g[i] * g[i];
            const double mhat = m[i] / bc1;
            const double vhat = v[i] / bc2;
            p[i] -= state.learning_rate * mhat / (std::sqrt(vhat) + state.epsilon);
        }
    }
}

} // namespace vlab::nn
