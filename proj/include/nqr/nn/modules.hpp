#pragma once

#include <cmath>
#include <memory>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "nqr/nn/tensor.hpp"

namespace nqr::nn {

enum class ActivationKind {
  ComplexReLU,
  ReLU,
  ComplexCardioid,
  ComplexPhaseTanh,
  Hardtanh,
  ComplexPReLU,
  PReLU,
};

template <class S>
struct Module {
  virtual ~Module() = default;
  virtual Tensor<S> forward(const Tensor<S>& x) = 0;
  virtual Tensor<S> backward(const Tensor<S>& gy) = 0;
  virtual void collect_params(std::vector<Param<S>*>&) {}
};

// Glorot-uniform fan scaling; complex entries draw re and im independently
// with half the real variance so |w| matches the real counterpart.
template <class S>
void glorot_init(Mat<S>& w, Eigen::Index fan_in, Eigen::Index fan_out,
                 std::mt19937_64& rng) {
  const double a = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
  if constexpr (is_complex_v<S>) {
    std::uniform_real_distribution<double> u(-a / std::numbers::sqrt2,
                                             a / std::numbers::sqrt2);
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      const double re = u(rng);
      const double im = u(rng);
      w(i) = {re, im};
    }
  } else {
    std::uniform_real_distribution<double> u(-a, a);
    for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = u(rng);
  }
}

template <class S>
class Linear : public Module<S> {
 public:
  Linear(Eigen::Index in, Eigen::Index out, std::mt19937_64& rng,
         const std::string& name = "linear") {
    weight_.resize(out, in);
    bias_.resize(out, 1);
    weight_.name = name + ".w";
    bias_.name = name + ".b";
    glorot_init(weight_.value, in, out, rng);
  }

  Tensor<S> forward(const Tensor<S>& x) override {
    if (x.channels() != weight_.value.cols())
      throw std::invalid_argument("Linear: input dimension mismatch");
    x_ = x;
    Tensor<S> y;
    y.batch = x.batch;
    y.time = x.time;
    y.v.noalias() = weight_.value * x.v;
    y.v.colwise() += bias_.value.col(0);
    return y;
  }

  Tensor<S> backward(const Tensor<S>& gy) override {
    weight_.grad.noalias() += gy.v * x_.v.adjoint();
    bias_.grad.col(0) += gy.v.rowwise().sum();
    Tensor<S> gx;
    gx.batch = gy.batch;
    gx.time = gy.time;
    gx.v.noalias() = weight_.value.adjoint() * gy.v;
    return gx;
  }

  void collect_params(std::vector<Param<S>*>& out) override {
    out.push_back(&weight_);
    out.push_back(&bias_);
  }

  Param<S>& weight() { return weight_; }
  Param<S>& bias() { return bias_; }

 private:
  Param<S> weight_, bias_;
  Tensor<S> x_;
};

struct ConvGeometry {
  Eigen::Index in_ch = 1, out_ch = 1, kernel = 1;
  Eigen::Index stride = 1, dilation = 1, pad = 0;
  bool depthwise = false;
};

template <class S>
class Conv1d : public Module<S> {
 public:
  Conv1d(ConvGeometry g, std::mt19937_64& rng, const std::string& name = "conv")
      : g_(g) {
    if (g_.kernel <= 0 || g_.stride <= 0 || g_.dilation <= 0 || g_.pad < 0)
      throw std::invalid_argument("Conv1d: invalid geometry");
    if (g_.depthwise && g_.in_ch != g_.out_ch)
      throw std::invalid_argument("Conv1d: depthwise needs in_ch == out_ch");
    if (g_.depthwise) {
      weight_.resize(g_.in_ch, g_.kernel);
      glorot_init(weight_.value, g_.kernel, g_.kernel, rng);
    } else {
      weight_.resize(g_.out_ch, g_.in_ch * g_.kernel);
      glorot_init(weight_.value, g_.in_ch * g_.kernel, g_.out_ch * g_.kernel,
                  rng);
    }
    bias_.resize(g_.out_ch, 1);
    weight_.name = name + ".w";
    bias_.name = name + ".b";
  }

  Eigen::Index out_time(Eigen::Index t_in) const {
    const Eigen::Index span = g_.dilation * (g_.kernel - 1) + 1;
    const Eigen::Index t = (t_in + 2 * g_.pad - span) / g_.stride + 1;
    if (t_in + 2 * g_.pad < span || t <= 0)
      throw std::invalid_argument("Conv1d: invalid geometry for input length");
    return t;
  }

  Tensor<S> forward(const Tensor<S>& x) override {
    if (x.channels() != g_.in_ch)
      throw std::invalid_argument("Conv1d: channel mismatch");
    x_ = x;
    const Eigen::Index t_out = prepare_index_map(x.time);
    Tensor<S> y = Tensor<S>::zeros(g_.out_ch, x.batch, t_out);
    if (g_.depthwise) {
      for (Eigen::Index b = 0; b < x.batch; ++b) {
        auto xb = x.example(b);
        auto yb = y.example(b);
        for (Eigen::Index j = 0; j < t_out; ++j)
          for (Eigen::Index p = 0; p < g_.kernel; ++p) {
            const Eigen::Index src = idx_[static_cast<std::size_t>(j * g_.kernel + p)];
            if (src >= 0) yb.col(j) += weight_.value.col(p).cwiseProduct(xb.col(src));
          }
      }
    } else {
      const Mat<S> col = im2col(x, t_out);
      y.v.noalias() = weight_.value * col;
    }
    y.v.colwise() += bias_.value.col(0);
    return y;
  }

  Tensor<S> backward(const Tensor<S>& gy) override {
    const Eigen::Index t_out = gy.time;
    Tensor<S> gx = Tensor<S>::zeros(g_.in_ch, x_.batch, x_.time);
    bias_.grad.col(0) += gy.v.rowwise().sum();
    if (g_.depthwise) {
      for (Eigen::Index b = 0; b < x_.batch; ++b) {
        auto xb = x_.example(b);
        auto gb = gx.example(b);
        auto gyb = gy.example(b);
        for (Eigen::Index j = 0; j < t_out; ++j)
          for (Eigen::Index p = 0; p < g_.kernel; ++p) {
            const Eigen::Index src = idx_[static_cast<std::size_t>(j * g_.kernel + p)];
            if (src < 0) continue;
            gb.col(src) += weight_.value.col(p).conjugate().cwiseProduct(gyb.col(j));
            weight_.grad.col(p) += xb.col(src).conjugate().cwiseProduct(gyb.col(j));
          }
      }
    } else {
      const Mat<S> col = im2col(x_, t_out);
      weight_.grad.noalias() += gy.v * col.adjoint();
      Mat<S> gcol;
      gcol.noalias() = weight_.value.adjoint() * gy.v;
      for (Eigen::Index b = 0; b < x_.batch; ++b) {
        auto gb = gx.example(b);
        for (Eigen::Index j = 0; j < t_out; ++j)
          for (Eigen::Index p = 0; p < g_.kernel; ++p) {
            const Eigen::Index src = idx_[static_cast<std::size_t>(j * g_.kernel + p)];
            if (src >= 0)
              gb.col(src) += gcol.block(p * g_.in_ch, b * t_out + j, g_.in_ch, 1);
          }
      }
    }
    return gx;
  }

  void collect_params(std::vector<Param<S>*>& out) override {
    out.push_back(&weight_);
    out.push_back(&bias_);
  }

 private:
  // Source sample index for (output frame, tap); -1 marks zero padding.
  Eigen::Index prepare_index_map(Eigen::Index t_in) {
    const Eigen::Index t_out = out_time(t_in);
    if (t_in != cached_t_in_) {
      idx_.assign(static_cast<std::size_t>(t_out * g_.kernel), -1);
      for (Eigen::Index j = 0; j < t_out; ++j)
        for (Eigen::Index p = 0; p < g_.kernel; ++p) {
          const Eigen::Index src = j * g_.stride + p * g_.dilation - g_.pad;
          if (src >= 0 && src < t_in)
            idx_[static_cast<std::size_t>(j * g_.kernel + p)] = src;
        }
      cached_t_in_ = t_in;
    }
    return t_out;
  }

  Mat<S> im2col(const Tensor<S>& x, Eigen::Index t_out) const {
    Mat<S> col = Mat<S>::Zero(g_.in_ch * g_.kernel, x.batch * t_out);
    for (Eigen::Index b = 0; b < x.batch; ++b) {
      auto xb = x.example(b);
      for (Eigen::Index j = 0; j < t_out; ++j)
        for (Eigen::Index p = 0; p < g_.kernel; ++p) {
          const Eigen::Index src = idx_[static_cast<std::size_t>(j * g_.kernel + p)];
          if (src >= 0)
            col.block(p * g_.in_ch, b * t_out + j, g_.in_ch, 1) = xb.col(src);
        }
    }
    return col;
  }

  ConvGeometry g_;
  Param<S> weight_, bias_;
  Tensor<S> x_;
  std::vector<Eigen::Index> idx_;
  Eigen::Index cached_t_in_ = -1;
};

// Transposed convolution with overlap-add, the decoder-side mirror of a
// strided Conv1d.
template <class S>
class ConvT1d : public Module<S> {
 public:
  ConvT1d(Eigen::Index in_ch, Eigen::Index out_ch, Eigen::Index kernel,
          Eigen::Index stride, std::mt19937_64& rng,
          const std::string& name = "convt")
      : in_ch_(in_ch), out_ch_(out_ch), kernel_(kernel), stride_(stride) {
    if (kernel <= 0 || stride <= 0)
      throw std::invalid_argument("ConvT1d: invalid geometry");
    weight_.resize(out_ch, in_ch * kernel);
    bias_.resize(out_ch, 1);
    weight_.name = name + ".w";
    bias_.name = name + ".b";
    glorot_init(weight_.value, in_ch * kernel, out_ch * kernel, rng);
  }

  Tensor<S> forward(const Tensor<S>& x) override {
    if (x.channels() != in_ch_)
      throw std::invalid_argument("ConvT1d: channel mismatch");
    x_ = x;
    const Eigen::Index t_out = (x.time - 1) * stride_ + kernel_;
    Tensor<S> y = Tensor<S>::zeros(out_ch_, x.batch, t_out);
    for (Eigen::Index p = 0; p < kernel_; ++p) {
      Mat<S> yp;
      yp.noalias() = weight_.value.middleCols(p * in_ch_, in_ch_) * x.v;
      for (Eigen::Index b = 0; b < x.batch; ++b) {
        auto yb = y.example(b);
        for (Eigen::Index j = 0; j < x.time; ++j)
          yb.col(j * stride_ + p) += yp.col(b * x.time + j);
      }
    }
    y.v.colwise() += bias_.value.col(0);
    return y;
  }

  Tensor<S> backward(const Tensor<S>& gy) override {
    bias_.grad.col(0) += gy.v.rowwise().sum();
    Tensor<S> gx = Tensor<S>::zeros(in_ch_, x_.batch, x_.time);
    Mat<S> gathered(out_ch_, x_.batch * x_.time);
    for (Eigen::Index p = 0; p < kernel_; ++p) {
      for (Eigen::Index b = 0; b < x_.batch; ++b) {
        auto gyb = gy.example(b);
        for (Eigen::Index j = 0; j < x_.time; ++j)
          gathered.col(b * x_.time + j) = gyb.col(j * stride_ + p);
      }
      weight_.grad.middleCols(p * in_ch_, in_ch_).noalias() +=
          gathered * x_.v.adjoint();
      gx.v.noalias() +=
          weight_.value.middleCols(p * in_ch_, in_ch_).adjoint() * gathered;
    }
    return gx;
  }

  void collect_params(std::vector<Param<S>*>& out) override {
    out.push_back(&weight_);
    out.push_back(&bias_);
  }

 private:
  Eigen::Index in_ch_, out_ch_, kernel_, stride_;
  Param<S> weight_, bias_;
  Tensor<S> x_;
};

// Per-example, per-channel normalization over the time axis with a learnable
// affine, applied to complex data with a real scale factor.
template <class S>
class ChannelNorm : public Module<S> {
 public:
  explicit ChannelNorm(Eigen::Index channels, const std::string& name = "norm")
      : channels_(channels) {
    gamma_.resize(channels, 1);
    beta_.resize(channels, 1);
    gamma_.value.setOnes();
    gamma_.name = name + ".gamma";
    beta_.name = name + ".beta";
  }

  Tensor<S> forward(const Tensor<S>& x) override {
    if (x.channels() != channels_)
      throw std::invalid_argument("ChannelNorm: channel mismatch");
    xhat_ = Tensor<S>::zeros_like(x);
    xhat_.batch = x.batch;
    xhat_.time = x.time;
    scale_.resize(channels_, x.batch);
    const double t = static_cast<double>(x.time);
    for (Eigen::Index b = 0; b < x.batch; ++b) {
      auto xb = x.example(b);
      Eigen::Matrix<S, Eigen::Dynamic, 1> mu = xb.rowwise().mean();
      Mat<S> z = xb.colwise() - mu;
      Eigen::ArrayXd var = z.cwiseAbs2().rowwise().sum().array() / t;
      scale_.col(b) = (var + eps_).rsqrt().matrix();
      xhat_.example(b) =
          scale_.col(b).template cast<S>().asDiagonal() * z;
    }
    Tensor<S> y = Tensor<S>::zeros_like(xhat_);
    for (Eigen::Index b = 0; b < x.batch; ++b) {
      y.example(b) = gamma_.value.col(0).asDiagonal() * xhat_.example(b);
      y.example(b).colwise() += beta_.value.col(0);
    }
    return y;
  }

  Tensor<S> backward(const Tensor<S>& gy) override {
    Tensor<S> gx = Tensor<S>::zeros_like(gy);
    const double t = static_cast<double>(gy.time);
    const Eigen::Matrix<S, Eigen::Dynamic, 1> gamma_conj =
        gamma_.value.col(0).conjugate();
    for (Eigen::Index b = 0; b < gy.batch; ++b) {
      auto g = gy.example(b);
      auto xhat = xhat_.example(b);
      beta_.grad.col(0) += g.rowwise().sum();
      gamma_.grad.col(0) += xhat.conjugate().cwiseProduct(g).rowwise().sum();

      Mat<S> g_xhat = gamma_conj.asDiagonal() * g;
      const Eigen::ArrayXd s = scale_.col(b).array();
      // z = xhat / s, recovered channel-wise
      Mat<S> z = s.inverse().matrix().template cast<S>().asDiagonal() * xhat;
      Eigen::ArrayXd dot =
          g_xhat.conjugate().cwiseProduct(z).real().rowwise().sum().array();
      Mat<S> g_z = s.matrix().template cast<S>().asDiagonal() * g_xhat -
                   ((s.pow(3) * dot / t).matrix().template cast<S>().asDiagonal() * z);
      Eigen::Matrix<S, Eigen::Dynamic, 1> mean_gz = g_z.rowwise().mean();
      gx.example(b) = g_z.colwise() - mean_gz;
    }
    return gx;
  }

  void collect_params(std::vector<Param<S>*>& out) override {
    out.push_back(&gamma_);
    out.push_back(&beta_);
  }

 private:
  Eigen::Index channels_;
  double eps_ = 1e-5;
  Param<S> gamma_, beta_;
  Tensor<S> xhat_;
  Eigen::MatrixXd scale_;
};

// Rectifier with a learnable per-channel slope; complex inputs share the
// slope between real and imaginary components, and only the real part of
// the stored parameter is active.
template <class S>
class PReLU : public Module<S> {
 public:
  explicit PReLU(Eigen::Index channels, const std::string& name = "prelu")
      : channels_(channels) {
    slope_.resize(channels, 1);
    slope_.value.setConstant(S(0.25));
    slope_.name = name + ".slope";
  }

  Tensor<S> forward(const Tensor<S>& x) override {
    if (x.channels() != channels_)
      throw std::invalid_argument("PReLU: channel mismatch");
    x_ = x;
    Tensor<S> y = x;
    for (Eigen::Index c = 0; c < channels_; ++c) {
      const double a = real_of(slope_.value(c, 0));
      if constexpr (is_complex_v<S>) {
        auto xr = x.v.row(c).real().array();
        auto xi = x.v.row(c).imag().array();
        y.v.row(c).real() = (xr > 0.0).select(xr, a * xr);
        y.v.row(c).imag() = (xi > 0.0).select(xi, a * xi);
      } else {
        auto xr = x.v.row(c).array();
        y.v.row(c) = (xr > 0.0).select(xr, a * xr);
      }
    }
    return y;
  }

  Tensor<S> backward(const Tensor<S>& gy) override {
    Tensor<S> gx = Tensor<S>::zeros_like(gy);
    for (Eigen::Index c = 0; c < channels_; ++c) {
      const double a = real_of(slope_.value(c, 0));
      double gslope = 0.0;
      if constexpr (is_complex_v<S>) {
        auto xr = x_.v.row(c).real().array();
        auto xi = x_.v.row(c).imag().array();
        auto gr = gy.v.row(c).real().array();
        auto gi = gy.v.row(c).imag().array();
        gx.v.row(c).real() = (xr > 0.0).select(gr, a * gr);
        gx.v.row(c).imag() = (xi > 0.0).select(gi, a * gi);
        gslope = ((xr <= 0.0).template cast<double>() * gr * xr).sum() +
                 ((xi <= 0.0).template cast<double>() * gi * xi).sum();
        slope_.grad(c, 0) += S(gslope);
      } else {
        auto xr = x_.v.row(c).array();
        auto gr = gy.v.row(c).array();
        gx.v.row(c) = (xr > 0.0).select(gr, a * gr);
        gslope = ((xr <= 0.0).template cast<double>() * gr * xr).sum();
        slope_.grad(c, 0) += gslope;
      }
    }
    return gx;
  }

  void collect_params(std::vector<Param<S>*>& out) override {
    out.push_back(&slope_);
  }

 private:
  static double real_of(const S& v) {
    if constexpr (is_complex_v<S>)
      return v.real();
    else
      return v;
  }
  Eigen::Index channels_;
  Param<S> slope_;
  Tensor<S> x_;
};

// Componentwise rectifier (CReLU on complex data).
template <class S>
class ReLU : public Module<S> {
 public:
  Tensor<S> forward(const Tensor<S>& x) override {
    x_ = x;
    Tensor<S> y = x;
    if constexpr (is_complex_v<S>) {
      y.v.real() = x.v.real().cwiseMax(0.0);
      y.v.imag() = x.v.imag().cwiseMax(0.0);
    } else {
      y.v = x.v.cwiseMax(0.0);
    }
    return y;
  }
  Tensor<S> backward(const Tensor<S>& gy) override {
    Tensor<S> gx = Tensor<S>::zeros_like(gy);
    if constexpr (is_complex_v<S>) {
      gx.v.real() = (x_.v.real().array() > 0.0).select(gy.v.real().array(), 0.0);
      gx.v.imag() = (x_.v.imag().array() > 0.0).select(gy.v.imag().array(), 0.0);
    } else {
      gx.v = (x_.v.array() > 0.0).select(gy.v.array(), 0.0);
    }
    return gx;
  }

 private:
  Tensor<S> x_;
};

// Componentwise logistic map, used as the mask nonlinearity.
template <class S>
class Sigmoid : public Module<S> {
 public:
  Tensor<S> forward(const Tensor<S>& x) override {
    Tensor<S> y = x;
    if constexpr (is_complex_v<S>) {
      y.v.real() = x.v.real().unaryExpr([](double u) { return 1.0 / (1.0 + std::exp(-u)); });
      y.v.imag() = x.v.imag().unaryExpr([](double u) { return 1.0 / (1.0 + std::exp(-u)); });
    } else {
      y.v = x.v.unaryExpr([](double u) { return 1.0 / (1.0 + std::exp(-u)); });
    }
    y_ = y;
    return y;
  }
  Tensor<S> backward(const Tensor<S>& gy) override {
    Tensor<S> gx = Tensor<S>::zeros_like(gy);
    if constexpr (is_complex_v<S>) {
      gx.v.real() = gy.v.real().array() * y_.v.real().array() * (1.0 - y_.v.real().array());
      gx.v.imag() = gy.v.imag().array() * y_.v.imag().array() * (1.0 - y_.v.imag().array());
    } else {
      gx.v = gy.v.array() * y_.v.array() * (1.0 - y_.v.array());
    }
    return gx;
  }

 private:
  Tensor<S> y_;
};

// Real-only saturating rectifier, clamping to [-1, 1].
template <class S>
class Hardtanh : public Module<S> {
  static_assert(!is_complex_v<S>, "Hardtanh is a real-valued activation");

 public:
  Tensor<S> forward(const Tensor<S>& x) override {
    x_ = x;
    Tensor<S> y = x;
    y.v = x.v.cwiseMax(-1.0).cwiseMin(1.0);
    return y;
  }
  Tensor<S> backward(const Tensor<S>& gy) override {
    Tensor<S> gx = Tensor<S>::zeros_like(gy);
    gx.v = ((x_.v.array() > -1.0) && (x_.v.array() < 1.0))
               .select(gy.v.array(), 0.0);
    return gx;
  }

 private:
  Tensor<S> x_;
};

// z * (1 + cos(arg z)) / 2.
template <class S>
class Cardioid : public Module<S> {
  static_assert(is_complex_v<S>, "Cardioid is a complex activation");

 public:
  Tensor<S> forward(const Tensor<S>& x) override {
    x_ = x;
    Tensor<S> y = Tensor<S>::zeros_like(x);
    for (Eigen::Index i = 0; i < x.v.size(); ++i) {
      const CScalar z = x.v(i);
      const double r = std::abs(z);
      y.v(i) = r < kTiny ? CScalar(0.0) : 0.5 * z * (1.0 + z.real() / r);
    }
    return y;
  }

  Tensor<S> backward(const Tensor<S>& gy) override {
    Tensor<S> gx = Tensor<S>::zeros_like(gy);
    for (Eigen::Index i = 0; i < gy.v.size(); ++i) {
      const CScalar z = x_.v(i);
      const double a = z.real(), b = z.imag();
      const double r = std::abs(z);
      if (r < kTiny) continue;  // kink at the origin
      const double r3 = r * r * r;
      const double du_da = 0.5 * (1.0 + 2.0 * a / r - a * a * a / r3);
      const double du_db = -0.5 * a * a * b / r3;
      const double dv_da = 0.5 * (b / r - a * a * b / r3);
      const double dv_db = 0.5 * (1.0 + a / r - a * b * b / r3);
      const double gu = gy.v(i).real(), gv = gy.v(i).imag();
      gx.v(i) = {gu * du_da + gv * dv_da, gu * du_db + gv * dv_db};
    }
    return gx;
  }

 private:
  static constexpr double kTiny = 1e-300;
  Tensor<S> x_;
};

// tanh(|z|) * z / |z|: bounded magnitude, preserved phase.
template <class S>
class PhaseTanh : public Module<S> {
  static_assert(is_complex_v<S>, "PhaseTanh is a complex activation");

 public:
  Tensor<S> forward(const Tensor<S>& x) override {
    x_ = x;
    Tensor<S> y = Tensor<S>::zeros_like(x);
    for (Eigen::Index i = 0; i < x.v.size(); ++i) {
      const CScalar z = x.v(i);
      const double r = std::abs(z);
      y.v(i) = scale(r) * z;
    }
    return y;
  }

  Tensor<S> backward(const Tensor<S>& gy) override {
    Tensor<S> gx = Tensor<S>::zeros_like(gy);
    for (Eigen::Index i = 0; i < gy.v.size(); ++i) {
      const CScalar z = x_.v(i);
      const double r = std::abs(z);
      const double s = scale(r);
      // d(s(r))/dr / r stays finite at the origin
      double slope_over_r;
      if (r < 1e-4) {
        slope_over_r = -2.0 / 3.0 + 8.0 * r * r / 15.0;
      } else {
        const double sech2 = 1.0 - std::tanh(r) * std::tanh(r);
        slope_over_r = (sech2 - s) / (r * r);
      }
      const CScalar g = gy.v(i);
      const double dot = g.real() * z.real() + g.imag() * z.imag();
      gx.v(i) = s * g + slope_over_r * dot * z;
    }
    return gx;
  }

 private:
  static double scale(double r) {
    return r < 1e-8 ? 1.0 - r * r / 3.0 : std::tanh(r) / r;
  }
  Tensor<S> x_;
};

template <class S>
std::unique_ptr<Module<S>> make_activation(ActivationKind kind,
                                           Eigen::Index channels,
                                           const std::string& name = "act") {
  if constexpr (is_complex_v<S>) {
    switch (kind) {
      case ActivationKind::ComplexReLU: return std::make_unique<ReLU<S>>();
      case ActivationKind::ComplexCardioid: return std::make_unique<Cardioid<S>>();
      case ActivationKind::ComplexPhaseTanh: return std::make_unique<PhaseTanh<S>>();
      case ActivationKind::ComplexPReLU:
        return std::make_unique<PReLU<S>>(channels, name);
      default:
        throw std::invalid_argument("activation incompatible with complex mode");
    }
  } else {
    switch (kind) {
      case ActivationKind::ReLU: return std::make_unique<ReLU<S>>();
      case ActivationKind::Hardtanh: return std::make_unique<Hardtanh<S>>();
      case ActivationKind::PReLU:
        return std::make_unique<PReLU<S>>(channels, name);
      default:
        throw std::invalid_argument("activation incompatible with real mode");
    }
  }
}

// Plain sequential chain.
template <class S>
struct Stack {
  std::vector<std::unique_ptr<Module<S>>> layers;

  Tensor<S> forward(Tensor<S> x) {
    for (auto& l : layers) x = l->forward(x);
    return x;
  }
  Tensor<S> backward(Tensor<S> g) {
    for (auto it = layers.rbegin(); it != layers.rend(); ++it)
      g = (*it)->backward(g);
    return g;
  }
  std::vector<Param<S>*> params() {
    std::vector<Param<S>*> out;
    for (auto& l : layers) l->collect_params(out);
    return out;
  }
};

}  // namespace nqr::nn
