#pragma once

#include <functional>
#include <vector>

#include "vlab/nn.hpp"
#include "vlab/rng.hpp"
#include "vlab/tensor.hpp"

namespace vlab::vae {

/// Per-sample posterior moments produced by the encoder.
struct GaussianParams {
    Tensor mu;      // (batch x k)
    Tensor log_var; // (batch x k)
};

/// Encoder emits 2k outputs: first k are mu, last k are log sigma^2.
/// The decoder is deterministic; reconstruction error is plain MSE.
struct VaeModel {
    nn::Mlp encoder;
    nn::Mlp decoder;
    std::size_t latent_dim = 0;
    double beta = 1.0;

    std::size_t data_dim() const { return encoder.input_dim(); }
    void validate() const;
};

struct LossBreakdown {
    double mse = 0.0;
    double kl = 0.0;    // mean per-sample KL
    double total = 0.0; // mse + beta * kl
    double variance_law = 0.0;
    double mu_mean_norm = 0.0;
};

struct VaeGradients {
    nn::Gradients encoder;
    nn::Gradients decoder;
};

struct TrainConfig {
    std::size_t epochs = 10;
    std::size_t batch_size = 128;
    double learning_rate = 1e-3;
    std::uint64_t seed = 0;
    std::size_t beta_warmup_epochs = 0; // 0 disables the linear warm-up
    // called after each epoch with (epoch index, epoch averages)
    std::function<void(std::size_t, const LossBreakdown&)> on_epoch;
};

/// Convenience builder: data_dim -> hidden... -> 2k encoder and the mirrored
/// k -> hidden(reversed)... -> data_dim decoder. Hidden layers use
/// `hidden_act`, encoder output is linear, decoder output uses `output_act`.
VaeModel make_vae(std::size_t data_dim, const std::vector<std::size_t>& hidden,
                  std::size_t latent_dim, double beta, Rng& rng,
                  nn::Activation hidden_act = nn::Activation::Tanh,
                  nn::Activation output_act = nn::Activation::Sigmoid);

GaussianParams encode(const VaeModel& model, const Tensor& x);

Tensor decode(const VaeModel& model, const Tensor& z);

/// z = mu + sigma * delta with delta ~ N(0,1) from `rng`. The noise is a
/// plain input of the gradient path through mu/sigma; no gradient reaches
/// delta itself. sigma = exp(log_var/2) with the overflow guard applied to
/// the upper bound, so log_var -> -inf collapses z onto mu.
Tensor reparameterize(const GaussianParams& params, Rng& rng);

/// Closed-form KL against the standard normal prior, one value per sample:
/// 0.5 * sum_j (mu_j^2 + sigma_j^2 - log sigma_j^2 - 1).
Tensor kl_closed_form(const GaussianParams& params);

/// (mean of mu^2 over samples and components) + (mean of sigma^2).
/// Second value: ||mean over samples of mu|| / sqrt(k).
struct VarianceLaw {
    double law = 0.0;
    double mu_mean_norm = 0.0;
};
VarianceLaw variance_law(const GaussianParams& params);

/// Entropy/cross-entropy split of the averaged KL: cross_entropy minus
/// avg_entropy reproduces the mean closed-form KL; `residual` is the
/// absolute difference between the two routes.
struct EntropyDecomposition {
    double avg_entropy = 0.0;
    double cross_entropy = 0.0;
    double residual = 0.0;
};
EntropyDecomposition entropy_decomposition(const GaussianParams& params);

LossBreakdown loss(const VaeModel& model, const Tensor& x, Rng& rng);

/// Loss plus gradients for every encoder/decoder parameter. `beta_override`
/// substitutes the model beta (used by the warm-up schedule).
LossBreakdown loss_and_gradients(const VaeModel& model, const Tensor& x, Rng& rng,
                                 VaeGradients& grads, double beta_override = -1.0);

/// Mini-batch Adam training; deterministic given (data order, seed).
/// Returns one LossBreakdown per epoch (sample-weighted batch averages).
/// Throws TrainError with epoch/batch indices if the loss turns non-finite.
std::vector<LossBreakdown> train(VaeModel& model, const Tensor& data, const TrainConfig& config);

} // namespace vlab::vae
