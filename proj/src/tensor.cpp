#include "boxhead/tensor.hpp"

#include <algorithm>
#include <cmath>

namespace boxhead {

std::string Dims4::str() const {
  return "(" + std::to_string(b) + "," + std::to_string(c) + "," +
         std::to_string(h) + "," + std::to_string(w) + ")";
}

Tensor4::Tensor4(int b, int c, int h, int w, double fill) {
  check(b >= 0 && c >= 0 && h >= 0 && w >= 0,
        "Tensor4: negative dimension in (" + std::to_string(b) + "," +
            std::to_string(c) + "," + std::to_string(h) + "," +
            std::to_string(w) + ")");
  dims_ = {b, c, h, w};
  data_.assign(static_cast<std::size_t>(dims_.count()), fill);
}

Tensor4 Tensor4::from_data(int b, int c, int h, int w,
                           std::vector<double> data) {
  Tensor4 t(b, c, h, w);
  check(static_cast<std::int64_t>(data.size()) == t.dims_.count(),
        "Tensor4: data length " + std::to_string(data.size()) +
            " does not match dims " + t.dims_.str());
  t.data_ = std::move(data);
  return t;
}

void Tensor4::fill(double v) { std::fill(data_.begin(), data_.end(), v); }

double Tensor4::sum() const {
  double s = 0.0;
  for (double v : data_) s += v;
  return s;
}

bool Tensor4::all_finite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

Tensor4 random_uniform(Rng& rng, int b, int c, int h, int w, double lo,
                       double hi) {
  Tensor4 t(b, c, h, w);
  for (double& v : t.storage()) v = rng.uniform(lo, hi);
  return t;
}

}  // namespace boxhead
