#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "fasr/errors.hpp"

namespace fasr {

// Dense row-major tensor of doubles, rank 1..4. Buffers above a size
// threshold are recycled through a thread-local pool: a training step touches
// several >100 MB correlation buffers and per-step mmap round trips dominate
// the profile otherwise.
class Tensor {
public:
    static constexpr int kMaxRank = 4;

    Tensor() = default;
    Tensor(std::initializer_list<int> shape, bool zero_fill = true);
    explicit Tensor(const std::vector<int>& shape, bool zero_fill = true);
    ~Tensor();

    Tensor(const Tensor& other);
    Tensor& operator=(const Tensor& other);
    Tensor(Tensor&& other) noexcept;
    Tensor& operator=(Tensor&& other) noexcept;

    static Tensor zeros(std::initializer_list<int> shape) { return Tensor(shape, true); }
    static Tensor empty(std::initializer_list<int> shape) { return Tensor(shape, false); }
    static Tensor scalar(double v);
    static Tensor full(std::initializer_list<int> shape, double v);

    int rank() const { return rank_; }
    int dim(int i) const { return shape_[size_t(i)]; }
    size_t numel() const { return numel_; }
    std::vector<int> shape() const { return std::vector<int>(shape_.begin(), shape_.begin() + rank_); }
    bool same_shape(const Tensor& o) const;
    std::string shape_str() const;

    double* data() { return data_; }
    const double* data() const { return data_; }

    double& operator[](size_t i) { return data_[i]; }
    double operator[](size_t i) const { return data_[i]; }

    // Row-major accessors for the common ranks.
    double& at(int i, int j) { return data_[size_t(i) * shape_[1] + j]; }
    double at(int i, int j) const { return data_[size_t(i) * shape_[1] + j]; }
    double& at(int c, int y, int x) {
        return data_[(size_t(c) * shape_[1] + y) * shape_[2] + x];
    }
    double at(int c, int y, int x) const {
        return data_[(size_t(c) * shape_[1] + y) * shape_[2] + x];
    }
    double& at(int n, int c, int y, int x) {
        return data_[((size_t(n) * shape_[1] + c) * shape_[2] + y) * shape_[3] + x];
    }
    double at(int n, int c, int y, int x) const {
        return data_[((size_t(n) * shape_[1] + c) * shape_[2] + y) * shape_[3] + x];
    }

    // Reinterpret without copying; product of dims must match.
    Tensor reshaped(std::initializer_list<int> shape) const;

    void fill(double v);
    bool all_finite() const;
    double item() const;  // numel()==1 only

    bool empty_tensor() const { return data_ == nullptr; }

    // Pool introspection / control (used by tests and CLI teardown).
    static void pool_clear();
    static size_t pool_bytes();

private:
    void allocate(bool zero_fill);
    void release();

    std::array<int, kMaxRank> shape_{1, 1, 1, 1};
    int rank_ = 0;
    size_t numel_ = 0;
    double* data_ = nullptr;
};

// Split-layout complex companion of Tensor (frequency-domain values).
struct ComplexTensor {
    Tensor real;
    Tensor imag;

    ComplexTensor() = default;
    ComplexTensor(Tensor re, Tensor im);

    std::vector<int> shape() const { return real.shape(); }
    size_t numel() const { return real.numel(); }
};

}  // namespace fasr
