#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "nqr/nn/tensor.hpp"

namespace nqr::nn {

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

// Bias-corrected Adam acting independently on every real parameter
// component; a complex parameter contributes two components.
template <class S>
class Adam {
 public:
  Adam(std::vector<Param<S>*> params, AdamConfig cfg)
      : params_(std::move(params)), cfg_(cfg) {
    if (cfg_.lr <= 0.0) throw std::invalid_argument("Adam: lr must be positive");
    m_.reserve(params_.size());
    v_.reserve(params_.size());
    for (const auto* p : params_) {
      m_.emplace_back(Eigen::ArrayXd::Zero(p->real_size()));
      v_.emplace_back(Eigen::ArrayXd::Zero(p->real_size()));
    }
  }

  void zero_grad() {
    for (auto* p : params_) p->zero_grad();
  }

  void step() {
    ++t_;
    const double bc1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(t_));
    const double bc2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(t_));
    for (std::size_t i = 0; i < params_.size(); ++i) {
      auto* p = params_[i];
      Eigen::Map<Eigen::ArrayXd> w(p->flat(), p->real_size());
      Eigen::Map<const Eigen::ArrayXd> g(p->flat_grad(), p->real_size());
      m_[i] = cfg_.beta1 * m_[i] + (1.0 - cfg_.beta1) * g;
      v_[i] = cfg_.beta2 * v_[i] + (1.0 - cfg_.beta2) * g.square();
      w -= cfg_.lr * (m_[i] / bc1) / ((v_[i] / bc2).sqrt() + cfg_.eps);
    }
  }

  long step_count() const { return t_; }

 private:
  std::vector<Param<S>*> params_;
  std::vector<Eigen::ArrayXd> m_, v_;
  AdamConfig cfg_;
  long t_ = 0;
};

}  // namespace nqr::nn
