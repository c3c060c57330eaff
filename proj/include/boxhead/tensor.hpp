#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boxhead/common.hpp"

namespace boxhead {

struct Dims4 {
  int b = 0, c = 0, h = 0, w = 0;

  std::int64_t count() const {
    return static_cast<std::int64_t>(b) * c * h * w;
  }
  bool operator==(const Dims4&) const = default;
  std::string str() const;
};

// Dense rank-4 array in batch x channel x height x width layout, row-major
// 64-bit floats. The universal value type for features, score maps, weights
// and their gradients.
class Tensor4 {
 public:
  Tensor4() = default;
  Tensor4(int b, int c, int h, int w, double fill = 0.0);
  static Tensor4 from_data(int b, int c, int h, int w,
                           std::vector<double> data);

  int batch() const { return dims_.b; }
  int channels() const { return dims_.c; }
  int height() const { return dims_.h; }
  int width() const { return dims_.w; }
  Dims4 dims() const { return dims_; }
  std::int64_t size() const { return static_cast<std::int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  double& at(int b, int c, int y, int x) { return data_[offset(b, c, y, x)]; }
  double at(int b, int c, int y, int x) const {
    return data_[offset(b, c, y, x)];
  }

  // pointer to the contiguous (h*w) plane of one (batch, channel) pair
  double* plane(int b, int c) {
    return data_.data() + (static_cast<std::int64_t>(b) * dims_.c + c) *
                              dims_.h * dims_.w;
  }
  const double* plane(int b, int c) const {
    return data_.data() + (static_cast<std::int64_t>(b) * dims_.c + c) *
                              dims_.h * dims_.w;
  }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::vector<double>& storage() { return data_; }
  const std::vector<double>& storage() const { return data_; }

  void fill(double v);
  void zero() { fill(0.0); }
  double sum() const;
  bool all_finite() const;
  bool same_dims(const Tensor4& other) const { return dims_ == other.dims_; }

 private:
  std::int64_t offset(int b, int c, int y, int x) const {
    return ((static_cast<std::int64_t>(b) * dims_.c + c) * dims_.h + y) *
               dims_.w +
           x;
  }

  Dims4 dims_;
  std::vector<double> data_;
};

Tensor4 random_uniform(Rng& rng, int b, int c, int h, int w, double lo = -1.0,
                       double hi = 1.0);

// ViT-style token embedding (B, N, D), row-major. Input form of the head
// before the spatial reshape.
struct Tokens {
  int batch = 0, count = 0, dim = 0;
  std::vector<double> data;

  Tokens() = default;
  Tokens(int b, int n, int d, double fill = 0.0)
      : batch(b), count(n), dim(d),
        data(static_cast<std::size_t>(b) * n * d, fill) {}

  double& at(int b, int t, int d) {
    return data[(static_cast<std::int64_t>(b) * count + t) * dim + d];
  }
  double at(int b, int t, int d) const {
    return data[(static_cast<std::int64_t>(b) * count + t) * dim + d];
  }
};

}  // namespace boxhead
