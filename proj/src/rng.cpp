#include "vlab/rng.hpp"

#include <cmath>

#include "vlab/errors.hpp"

namespace vlab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

} // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
}

std::uint64_t Rng::next_u64() {
    // xoshiro256++ step
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    ++position_;
    return result;
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
    // u1 shifted away from 0 so that log() stays finite.
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

std::size_t Rng::below(std::size_t n) {
    if (n == 0) throw ValueError("Rng::below: n must be positive");
    // rejection sampling keeps the distribution exactly uniform
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return static_cast<std::size_t>(v % n);
}

Tensor Rng::gaussian(std::vector<std::size_t> shape, double mean, double std) {
    if (std < 0.0) throw ValueError("Rng::gaussian: negative std");
    Tensor t(std::move(shape));
    if (std == 0.0) {
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = mean;
        return t;
    }
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = mean + std * normal();
    return t;
}

void Rng::shuffle(std::vector<std::size_t>& items) {
    if (items.size() < 2) return;
    for (std::size_t i = items.size() - 1; i > 0; --i) {
        const std::size_t j = below(i + 1);
        std::swap(items[i], items[j]);
    }
}

Rng Rng::split(std::uint64_t index) const {
    // child seed derived from (seed, index); streams decorrelated by the
    // splitmix64 scrambling of the combined word
    std::uint64_t base = seed_ ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    std::uint64_t sm = base;
    return Rng(splitmix64(sm));
}

} // namespace vlab
