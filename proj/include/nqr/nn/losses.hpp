#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "nqr/nn/tensor.hpp"

namespace nqr::nn {

enum class LossKind {
  ComplexMse,
  Mse,
  ComplexLogMse,
  LogMse,
  ComplexSdr,  // alias of SnrLoss in this artifact
  L1,
  SnrLoss,
};

template <class S>
struct LossResult {
  double value = 0.0;
  Tensor<S> grad;
};

namespace detail {

inline double sq(double x) { return x * x; }

// Sum of squared real components of one example block.
template <class D>
double block_sq_norm(const D& block) {
  return block.squaredNorm();
}

}  // namespace detail

// All losses reduce to a finite real scalar. Per-signal losses (logMSE and
// the SNR family) sum within an example and average over the batch.
template <class S>
LossResult<S> loss_eval(LossKind kind, const Tensor<S>& pred,
                        const Tensor<S>& target) {
  if (pred.v.rows() != target.v.rows() || pred.v.cols() != target.v.cols() ||
      pred.batch != target.batch)
    throw std::invalid_argument("loss_eval: shape mismatch");
  constexpr double kEps = 1e-12;
  const double n_entries = static_cast<double>(pred.v.size());
  const double n_components = n_entries * (is_complex_v<S> ? 2.0 : 1.0);
  const double n_batch = static_cast<double>(pred.batch);

  LossResult<S> out;
  out.grad = Tensor<S>::zeros_like(pred);
  Mat<S> diff = pred.v - target.v;

  switch (kind) {
    case LossKind::ComplexMse: {
      out.value = diff.squaredNorm() / n_entries;
      out.grad.v = (2.0 / n_entries) * diff;
      return out;
    }
    case LossKind::Mse: {
      out.value = diff.squaredNorm() / n_components;
      out.grad.v = (2.0 / n_components) * diff;
      return out;
    }
    case LossKind::ComplexLogMse:
    case LossKind::LogMse: {
      const Tensor<S> dt{std::move(diff), pred.batch, pred.time};
      double acc = 0.0;
      for (Eigen::Index b = 0; b < pred.batch; ++b) {
        const double e = detail::block_sq_norm(dt.example(b)) + kEps;
        acc += std::log(e);
        out.grad.example(b) = (2.0 / (n_batch * e)) * dt.example(b);
      }
      out.value = acc / n_batch;
      return out;
    }
    case LossKind::ComplexSdr:
    case LossKind::SnrLoss: {
      const Tensor<S> dt{std::move(diff), pred.batch, pred.time};
      const double scale = 10.0 / std::log(10.0);
      double acc = 0.0;
      for (Eigen::Index b = 0; b < pred.batch; ++b) {
        const double sig = detail::block_sq_norm(target.example(b));
        const double err = detail::block_sq_norm(dt.example(b)) + kEps;
        acc += -10.0 * std::log10(sig / err);
        out.grad.example(b) = (2.0 * scale / (n_batch * err)) * dt.example(b);
      }
      out.value = acc / n_batch;
      return out;
    }
    case LossKind::L1: {
      if constexpr (is_complex_v<S>) {
        out.value = (diff.real().array().abs().sum() +
                     diff.imag().array().abs().sum()) /
                    n_components;
        out.grad.v.real() = diff.real().array().sign() / n_components;
        out.grad.v.imag() = diff.imag().array().sign() / n_components;
      } else {
        out.value = diff.array().abs().sum() / n_components;
        out.grad.v = (diff.array().sign() / n_components).matrix();
      }
      return out;
    }
  }
  throw std::invalid_argument("loss_eval: unknown loss kind");
}

inline std::string loss_name(LossKind k) {
  switch (k) {
    case LossKind::ComplexMse: return "complexMSE";
    case LossKind::Mse: return "MSE";
    case LossKind::ComplexLogMse: return "complexLogMSE";
    case LossKind::LogMse: return "logMSE";
    case LossKind::ComplexSdr: return "complexSDR";
    case LossKind::L1: return "L1";
    case LossKind::SnrLoss: return "SNRloss";
  }
  return "?";
}

}  // namespace nqr::nn
