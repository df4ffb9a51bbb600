#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "vlab/errors.hpp"

namespace vlab {

/// Dense row-major tensor of doubles. Rank 0 (empty shape) is a scalar
/// holding exactly one value. All in-memory computation is done in 64-bit;
/// 32-bit storage exists only in file dumps.
class Tensor {
  public:
    Tensor() = default;

    explicit Tensor(std::vector<std::size_t> shape);
    Tensor(std::vector<std::size_t> shape, std::vector<double> data);
    Tensor(std::initializer_list<std::size_t> shape) : Tensor(std::vector<std::size_t>(shape)) {}

    static Tensor scalar(double v);
    static Tensor matrix(std::size_t rows, std::size_t cols, std::vector<double> data);
    static Tensor zeros(std::vector<std::size_t> shape) { return Tensor(std::move(shape)); }
    static Tensor full(std::vector<std::size_t> shape, double value);
    static Tensor identity(std::size_t n);

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t size() const { return data_.size(); }

    // 2-D accessors; throw on rank mismatch.
    std::size_t rows() const;
    std::size_t cols() const;

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::vector<double>& values() { return data_; }
    const std::vector<double>& values() const { return data_; }

    /// Reinterpret as (rows x cols) without copying; product must match size.
    Tensor reshaped(std::vector<std::size_t> shape) const;

    Tensor row(std::size_t i) const;

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
    bool all_finite() const;

    std::string shape_str() const;

  private:
    std::vector<std::size_t> shape_;
    std::vector<double> data_;
    std::size_t cols_ = 0; // cached for 2-D indexing; 0 unless rank >= 1
};

std::size_t shape_product(const std::vector<std::size_t>& shape);

/// Throws ShapeError unless the two tensors have identical shapes.
void require_same_shape(const Tensor& a, const Tensor& b, const char* where);

/// Throws ValueError if any entry is NaN/Inf. Used by file loaders.
void require_finite(const Tensor& t, const char* where);

// Elementwise arithmetic on matching shapes.
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, double s);

} // namespace vlab
