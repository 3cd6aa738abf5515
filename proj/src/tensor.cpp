#include "fasr/tensor.hpp"

#include <cmath>
#include <cstring>
#include <new>
#include <sstream>
#include <unordered_map>

namespace fasr {
namespace {

// Thread-local free lists keyed by element count. Only buffers of at least
// kPoolMinElems are pooled; smaller ones go straight to the allocator.
constexpr size_t kPoolMinElems = 1 << 13;          // 64 KiB of doubles
constexpr size_t kPoolMaxPerSize = 4;
constexpr size_t kPoolMaxBytes = size_t(2) << 30;  // 2 GiB cap

struct BufferPool {
    std::unordered_map<size_t, std::vector<double*>> free_lists;
    size_t bytes = 0;

    ~BufferPool() {
        for (auto& [n, list] : free_lists)
            for (double* p : list) ::operator delete[](p, std::align_val_t(64));
    }

    double* acquire(size_t n) {
        auto it = free_lists.find(n);
        if (it != free_lists.end() && !it->second.empty()) {
            double* p = it->second.back();
            it->second.pop_back();
            bytes -= n * sizeof(double);
            return p;
        }
        return static_cast<double*>(::operator new[](n * sizeof(double), std::align_val_t(64)));
    }

    void release(double* p, size_t n) {
        if (n >= kPoolMinElems && bytes + n * sizeof(double) <= kPoolMaxBytes) {
            auto& list = free_lists[n];
            if (list.size() < kPoolMaxPerSize) {
                list.push_back(p);
                bytes += n * sizeof(double);
                return;
            }
        }
        ::operator delete[](p, std::align_val_t(64));
    }

    void clear() {
        for (auto& [n, list] : free_lists)
            for (double* p : list) ::operator delete[](p, std::align_val_t(64));
        free_lists.clear();
        bytes = 0;
    }
};

BufferPool& pool() {
    thread_local BufferPool p;
    return p;
}

}  // namespace

Tensor::Tensor(std::initializer_list<int> shape, bool zero_fill)
    : Tensor(std::vector<int>(shape), zero_fill) {}

Tensor::Tensor(const std::vector<int>& shape, bool zero_fill) {
    if (shape.empty() || shape.size() > kMaxRank)
        throw DimensionError("tensor rank must be 1.." + std::to_string(kMaxRank) +
                             ", got " + std::to_string(shape.size()));
    rank_ = int(shape.size());
    numel_ = 1;
    for (int i = 0; i < rank_; ++i) {
        if (shape[size_t(i)] < 1)
            throw DimensionError("tensor extent must be >= 1, got " + std::to_string(shape[size_t(i)]));
        shape_[size_t(i)] = shape[size_t(i)];
        numel_ *= size_t(shape[size_t(i)]);
    }
    allocate(zero_fill);
}

Tensor::~Tensor() { release(); }

Tensor::Tensor(const Tensor& other) : shape_(other.shape_), rank_(other.rank_), numel_(other.numel_) {
    if (other.data_) {
        allocate(false);
        std::memcpy(data_, other.data_, numel_ * sizeof(double));
    }
}

Tensor& Tensor::operator=(const Tensor& other) {
    if (this == &other) return *this;
    if (data_ && numel_ == other.numel_ && other.data_) {
        shape_ = other.shape_;
        rank_ = other.rank_;
        std::memcpy(data_, other.data_, numel_ * sizeof(double));
        return *this;
    }
    release();
    shape_ = other.shape_;
    rank_ = other.rank_;
    numel_ = other.numel_;
    if (other.data_) {
        allocate(false);
        std::memcpy(data_, other.data_, numel_ * sizeof(double));
    }
    return *this;
}

Tensor::Tensor(Tensor&& other) noexcept
    : shape_(other.shape_), rank_(other.rank_), numel_(other.numel_), data_(other.data_) {
    other.data_ = nullptr;
    other.numel_ = 0;
    other.rank_ = 0;
}

Tensor& Tensor::operator=(Tensor&& other) noexcept {
    if (this == &other) return *this;
    release();
    shape_ = other.shape_;
    rank_ = other.rank_;
    numel_ = other.numel_;
    data_ = other.data_;
    other.data_ = nullptr;
    other.numel_ = 0;
    other.rank_ = 0;
    return *this;
}

Tensor Tensor::scalar(double v) {
    Tensor t({1}, false);
    t.data_[0] = v;
    return t;
}

Tensor Tensor::full(std::initializer_list<int> shape, double v) {
    Tensor t(shape, false);
    t.fill(v);
    return t;
}

bool Tensor::same_shape(const Tensor& o) const {
    if (rank_ != o.rank_) return false;
    for (int i = 0; i < rank_; ++i)
        if (shape_[size_t(i)] != o.shape_[size_t(i)]) return false;
    return true;
}

std::string Tensor::shape_str() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < rank_; ++i) os << shape_[size_t(i)] << (i + 1 < rank_ ? "," : "");
    os << ']';
    return os.str();
}

Tensor Tensor::reshaped(std::initializer_list<int> shape) const {
    Tensor out(shape, false);
    if (out.numel_ != numel_)
        throw DimensionError("reshape " + shape_str() + " -> " + out.shape_str() +
                             " changes element count");
    std::memcpy(out.data_, data_, numel_ * sizeof(double));
    return out;
}

void Tensor::fill(double v) {
    for (size_t i = 0; i < numel_; ++i) data_[i] = v;
}

bool Tensor::all_finite() const {
    for (size_t i = 0; i < numel_; ++i)
        if (!std::isfinite(data_[i])) return false;
    return true;
}

double Tensor::item() const {
    if (numel_ != 1) throw ContractError("item() on tensor with " + std::to_string(numel_) + " elements");
    return data_[0];
}

void Tensor::allocate(bool zero_fill) {
    data_ = pool().acquire(numel_);
    if (zero_fill) std::memset(data_, 0, numel_ * sizeof(double));
}

void Tensor::release() {
    if (data_) {
        pool().release(data_, numel_);
        data_ = nullptr;
    }
}

void Tensor::pool_clear() { pool().clear(); }

size_t Tensor::pool_bytes() { return pool().bytes; }

ComplexTensor::ComplexTensor(Tensor re, Tensor im) : real(std::move(re)), imag(std::move(im)) {
    if (!real.same_shape(imag))
        throw DimensionError("complex tensor: real " + real.shape_str() + " vs imag " +
                             imag.shape_str());
}

}  // namespace fasr
