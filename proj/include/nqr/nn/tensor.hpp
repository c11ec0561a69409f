#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <type_traits>
#include <vector>

namespace nqr::nn {

using CScalar = std::complex<double>;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
inline constexpr bool is_complex_v = std::is_same_v<S, CScalar>;

// Minibatch activation. Rows are channels (or features), columns run over
// (example, frame) with the frames of one example contiguous. Dense vectors
// (fully connected nets) use time == 1.
//
// Gradients share this type. For complex data a gradient entry packs
// (dL/d re, dL/d im) as a complex number, so complex backward rules are
// plain adjoint algebra.
template <class S>
struct Tensor {
  Mat<S> v;
  Eigen::Index batch = 0;
  Eigen::Index time = 0;

  Tensor() = default;
  Tensor(Mat<S> values, Eigen::Index b, Eigen::Index t)
      : v(std::move(values)), batch(b), time(t) {}

  Eigen::Index channels() const { return v.rows(); }
  auto example(Eigen::Index b) { return v.middleCols(b * time, time); }
  auto example(Eigen::Index b) const { return v.middleCols(b * time, time); }

  static Tensor zeros(Eigen::Index channels, Eigen::Index b, Eigen::Index t) {
    return {Mat<S>::Zero(channels, b * t), b, t};
  }
  static Tensor zeros_like(const Tensor& o) {
    return {Mat<S>::Zero(o.v.rows(), o.v.cols()), o.batch, o.time};
  }
};

// Trainable parameter plus gradient accumulator. The optimizer and the
// finite-difference checker see parameters as flat arrays of real
// components (a complex entry contributes two).
template <class S>
struct Param {
  Mat<S> value;
  Mat<S> grad;
  std::string name;

  void resize(Eigen::Index rows, Eigen::Index cols) {
    value = Mat<S>::Zero(rows, cols);
    grad = Mat<S>::Zero(rows, cols);
  }
  void zero_grad() { grad.setZero(); }
  Eigen::Index real_size() const {
    return value.size() * (is_complex_v<S> ? 2 : 1);
  }
  double* flat() { return reinterpret_cast<double*>(value.data()); }
  double* flat_grad() { return reinterpret_cast<double*>(grad.data()); }
};

template <class S>
std::vector<Mat<S>> snapshot_values(const std::vector<Param<S>*>& params) {
  std::vector<Mat<S>> out;
  out.reserve(params.size());
  for (const auto* p : params) out.push_back(p->value);
  return out;
}

template <class S>
void restore_values(const std::vector<Param<S>*>& params,
                    const std::vector<Mat<S>>& values) {
  for (std::size_t i = 0; i < params.size(); ++i)
    params[i]->value = values[i];
}

}  // namespace nqr::nn
