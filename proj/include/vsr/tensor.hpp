#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vsr/errors.hpp"
#include "vsr/rng.hpp"

namespace vsr {

// Dense row-major tensor. float in the training paths, double in the
// verification paths.
template <typename T>
struct Tensor {
  std::vector<int> shape;
  std::vector<T> data;

  Tensor() = default;

  static Tensor zeros(std::vector<int> s) {
    Tensor t;
    t.shape = std::move(s);
    t.data.assign(count(t.shape), T(0));
    return t;
  }

  static Tensor full(std::vector<int> s, T value) {
    Tensor t = zeros(std::move(s));
    for (auto& v : t.data) v = value;
    return t;
  }

  static Tensor from(std::vector<int> s, std::vector<T> values) {
    if (count(s) != values.size()) throw DimensionError("tensor: shape does not match value count");
    Tensor t;
    t.shape = std::move(s);
    t.data = std::move(values);
    return t;
  }

  static size_t count(const std::vector<int>& s) {
    size_t n = 1;
    for (int e : s) {
      if (e < 0) throw DimensionError("tensor: negative extent");
      n *= static_cast<size_t>(e);
    }
    return n;
  }

  size_t numel() const { return data.size(); }
  int rank() const { return static_cast<int>(shape.size()); }
  int dim(int i) const { return shape[static_cast<size_t>(i)]; }

  T* ptr() { return data.data(); }
  const T* ptr() const { return data.data(); }

  T& at(int i, int j) { return data[static_cast<size_t>(i) * shape[1] + j]; }
  const T& at(int i, int j) const { return data[static_cast<size_t>(i) * shape[1] + j]; }
  T& at(int i, int j, int k) {
    return data[(static_cast<size_t>(i) * shape[1] + j) * shape[2] + k];
  }
  const T& at(int i, int j, int k) const {
    return data[(static_cast<size_t>(i) * shape[1] + j) * shape[2] + k];
  }

  bool same_shape(const Tensor& o) const { return shape == o.shape; }

  template <typename U>
  Tensor<U> cast() const {
    Tensor<U> out;
    out.shape = shape;
    out.data.resize(data.size());
    for (size_t i = 0; i < data.size(); ++i) out.data[i] = static_cast<U>(data[i]);
    return out;
  }
};

using Tensor32 = Tensor<float>;
using Tensor64 = Tensor<double>;

template <typename T>
void check_finite(const Tensor<T>& t, const char* where) {
  for (const T& v : t.data) {
    if (!std::isfinite(v)) throw NumericError(std::string(where) + ": non-finite value");
  }
}

inline std::string shape_str(const std::vector<int>& s) {
  std::string out = "[";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// Raw kernels. Summation over the contraction dimension is strict
// left-to-right so results are reproducible run to run.
// ---------------------------------------------------------------------------

// C (+)= A[m,k] * B[k,n]
template <typename T>
void gemm_ab(const T* __restrict__ a, const T* __restrict__ b, T* __restrict__ c, int m, int k,
             int n, bool accumulate) {
  if (!accumulate) {
    for (size_t i = 0; i < static_cast<size_t>(m) * n; ++i) c[i] = T(0);
  }
  for (int i = 0; i < m; ++i) {
    const T* arow = a + static_cast<size_t>(i) * k;
    T* crow = c + static_cast<size_t>(i) * n;
    for (int kk = 0; kk < k; ++kk) {
      const T av = arow[kk];
      const T* brow = b + static_cast<size_t>(kk) * n;
      for (int j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

template <typename T>
void transpose(const T* __restrict__ src, T* __restrict__ dst, int rows, int cols) {
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) dst[static_cast<size_t>(j) * rows + i] = src[static_cast<size_t>(i) * cols + j];
}

// ---------------------------------------------------------------------------
// Public tensor operations (numerics module surface). Outputs are checked
// finite; NaN/Inf is an error state, not a value.
// ---------------------------------------------------------------------------

template <typename T>
Tensor<T> matmul(const Tensor<T>& a, const Tensor<T>& b) {
  if (a.rank() != 2 || b.rank() != 2) throw DimensionError("matmul: expects rank-2 tensors");
  if (a.dim(1) != b.dim(0))
    throw DimensionError("matmul: inner extents differ " + shape_str(a.shape) + " x " + shape_str(b.shape));
  Tensor<T> out = Tensor<T>::zeros({a.dim(0), b.dim(1)});
  gemm_ab(a.ptr(), b.ptr(), out.ptr(), a.dim(0), a.dim(1), b.dim(1), false);
  check_finite(out, "matmul");
  return out;
}

// rows softmax with per-row max subtraction
template <typename T>
Tensor<T> softmax_rows(const Tensor<T>& x) {
  if (x.rank() != 2) throw DimensionError("softmax_rows: expects rank-2 tensor");
  const int r = x.dim(0), c = x.dim(1);
  if (c < 1) throw DimensionError("softmax_rows: empty row dimension");
  Tensor<T> out = Tensor<T>::zeros({r, c});
  for (int i = 0; i < r; ++i) {
    const T* row = x.ptr() + static_cast<size_t>(i) * c;
    T* orow = out.ptr() + static_cast<size_t>(i) * c;
    T mx = row[0];
    for (int j = 1; j < c; ++j) mx = row[j] > mx ? row[j] : mx;
    T sum = T(0);
    for (int j = 0; j < c; ++j) {
      orow[j] = std::exp(row[j] - mx);
      sum += orow[j];
    }
    for (int j = 0; j < c; ++j) orow[j] /= sum;
  }
  check_finite(out, "softmax_rows");
  return out;
}

// per-position normalization over the trailing dimension
template <typename T>
Tensor<T> layer_norm(const Tensor<T>& x, const Tensor<T>& gamma, const Tensor<T>& beta, T eps) {
  if (x.rank() < 1) throw DimensionError("layer_norm: rank-0 input");
  const int c = x.shape.back();
  if (c == 0) throw DimensionError("layer_norm: zero channel dimension");
  if (gamma.numel() != static_cast<size_t>(c) || beta.numel() != static_cast<size_t>(c))
    throw DimensionError("layer_norm: gamma/beta length mismatch");
  Tensor<T> out = Tensor<T>::zeros(x.shape);
  const size_t rows = x.numel() / static_cast<size_t>(c);
  for (size_t i = 0; i < rows; ++i) {
    const T* row = x.ptr() + i * c;
    T* orow = out.ptr() + i * c;
    T mean = T(0);
    for (int j = 0; j < c; ++j) mean += row[j];
    mean /= static_cast<T>(c);
    T var = T(0);
    for (int j = 0; j < c; ++j) {
      const T d = row[j] - mean;
      var += d * d;
    }
    var /= static_cast<T>(c);
    const T inv = T(1) / std::sqrt(var + eps);
    for (int j = 0; j < c; ++j) orow[j] = (row[j] - mean) * inv * gamma.data[static_cast<size_t>(j)] + beta.data[static_cast<size_t>(j)];
  }
  check_finite(out, "layer_norm");
  return out;
}

// exact GELU (erf form)
template <typename T>
inline T gelu_scalar(T x) {
  return T(0.5) * x * (T(1) + std::erf(x * T(0.7071067811865475244)));
}

template <typename T>
inline T gelu_grad_scalar(T x) {
  const T cdf = T(0.5) * (T(1) + std::erf(x * T(0.7071067811865475244)));
  const T pdf = std::exp(T(-0.5) * x * x) * T(0.3989422804014326779);
  return cdf + x * pdf;
}

template <typename T>
Tensor<T> gelu(const Tensor<T>& x) {
  Tensor<T> out = Tensor<T>::zeros(x.shape);
  for (size_t i = 0; i < x.numel(); ++i) out.data[i] = gelu_scalar(x.data[i]);
  check_finite(out, "gelu");
  return out;
}

template <typename T>
Tensor<T> relu(const Tensor<T>& x) {
  Tensor<T> out = Tensor<T>::zeros(x.shape);
  for (size_t i = 0; i < x.numel(); ++i) out.data[i] = x.data[i] > T(0) ? x.data[i] : T(0);
  return out;
}

template <typename T>
Tensor<T> add(const Tensor<T>& a, const Tensor<T>& b) {
  if (!a.same_shape(b)) throw DimensionError("add: shape mismatch");
  Tensor<T> out = Tensor<T>::zeros(a.shape);
  for (size_t i = 0; i < a.numel(); ++i) out.data[i] = a.data[i] + b.data[i];
  return out;
}

template <typename T>
Tensor<T> mul(const Tensor<T>& a, const Tensor<T>& b) {
  if (!a.same_shape(b)) throw DimensionError("mul: shape mismatch");
  Tensor<T> out = Tensor<T>::zeros(a.shape);
  for (size_t i = 0; i < a.numel(); ++i) out.data[i] = a.data[i] * b.data[i];
  return out;
}

template <typename T>
Tensor<T> scale(const Tensor<T>& a, T s) {
  Tensor<T> out = Tensor<T>::zeros(a.shape);
  for (size_t i = 0; i < a.numel(); ++i) out.data[i] = a.data[i] * s;
  return out;
}

template <typename T>
Tensor<T> identity_matrix(int n) {
  Tensor<T> out = Tensor<T>::zeros({n, n});
  for (int i = 0; i < n; ++i) out.at(i, i) = T(1);
  return out;
}

template <typename T>
Tensor<T> random_tensor(std::vector<int> shape, Rng& rng, double lo = -1.0, double hi = 1.0) {
  Tensor<T> out = Tensor<T>::zeros(std::move(shape));
  for (auto& v : out.data) v = static_cast<T>(rng.uniform(lo, hi));
  return out;
}

template <typename T>
Tensor<T> clamp01(const Tensor<T>& x) {
  Tensor<T> out = Tensor<T>::zeros(x.shape);
  for (size_t i = 0; i < x.numel(); ++i) {
    T v = x.data[i];
    out.data[i] = v < T(0) ? T(0) : (v > T(1) ? T(1) : v);
  }
  return out;
}

template <typename T>
double max_abs_diff(const Tensor<T>& a, const Tensor<T>& b) {
  if (!a.same_shape(b)) throw DimensionError("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (size_t i = 0; i < a.numel(); ++i) {
    const double d = std::abs(static_cast<double>(a.data[i]) - static_cast<double>(b.data[i]));
    if (d > m) m = d;
  }
  return m;
}

}  // namespace vsr
