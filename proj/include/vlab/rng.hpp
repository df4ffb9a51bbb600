#pragma once

#include <cstdint>
#include <vector>

#include "vlab/tensor.hpp"

namespace vlab {

/// Deterministic random stream: xoshiro256++ seeded through splitmix64,
/// normal variates via the trigonometric Box-Muller transform (two uniforms
/// per draw, nothing cached). The integer stream is bit-exact on any
/// platform; the normal layer goes through libm sqrt/log/cos.
///
/// Single consumer by contract. For concurrent work, split() derives
/// independent child streams instead of sharing one state.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t position() const { return position_; }

    std::uint64_t next_u64();

    /// Uniform in [0, 1) with 53 random bits.
    double uniform();

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);

    /// Standard normal draw (Box-Muller, cosine branch).
    double normal();

    /// Uniform integer in [0, n). n must be > 0.
    std::size_t below(std::size_t n);

    /// i.i.d. N(mean, std^2) tensor. std must be >= 0; std == 0 yields the
    /// constant tensor.
    Tensor gaussian(std::vector<std::size_t> shape, double mean = 0.0, double std = 1.0);

    /// In-place Fisher-Yates shuffle.
    void shuffle(std::vector<std::size_t>& items);

    /// Deterministically derived independent stream #index.
    Rng split(std::uint64_t index) const;

  private:
    std::uint64_t seed_ = 0;
    std::uint64_t position_ = 0; // u64 draws consumed
    std::uint64_t s_[4] = {};
};

} // namespace vlab
