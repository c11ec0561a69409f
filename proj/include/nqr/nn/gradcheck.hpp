#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "nqr/nn/losses.hpp"
#include "nqr/nn/modules.hpp"

namespace nqr::nn {

// Central finite differences on every real parameter component against the
// analytic gradients filled in by `run(true)`. `run(false)` evaluates the
// same scalar loss without touching gradients. Returns the max relative
// error, with a small absolute floor in the denominator.
template <class S>
double grad_check_params(const std::function<double(bool)>& run,
                         const std::vector<Param<S>*>& params,
                         double eps = 1e-5) {
  for (auto* p : params) p->zero_grad();
  run(true);
  std::vector<Eigen::ArrayXd> analytic;
  analytic.reserve(params.size());
  for (auto* p : params)
    analytic.emplace_back(
        Eigen::Map<const Eigen::ArrayXd>(p->flat_grad(), p->real_size()));

  double max_rel = 0.0;
  for (std::size_t pi = 0; pi < params.size(); ++pi) {
    double* w = params[pi]->flat();
    for (Eigen::Index i = 0; i < params[pi]->real_size(); ++i) {
      const double orig = w[i];
      w[i] = orig + eps;
      const double fp = run(false);
      w[i] = orig - eps;
      const double fm = run(false);
      w[i] = orig;
      const double numeric = (fp - fm) / (2.0 * eps);
      const double a = analytic[pi](i);
      const double rel = std::abs(a - numeric) /
                         std::max({std::abs(a), std::abs(numeric), 1e-3});
      max_rel = std::max(max_rel, rel);
    }
  }
  return max_rel;
}

template <class S>
double grad_check_chain(Stack<S>& chain, LossKind loss, const Tensor<S>& input,
                        const Tensor<S>& target, double eps = 1e-5) {
  auto run = [&](bool with_grad) {
    Tensor<S> y = chain.forward(input);
    auto lr = loss_eval(loss, y, target);
    if (with_grad) chain.backward(lr.grad);
    return lr.value;
  };
  return grad_check_params<S>(run, chain.params(), eps);
}

struct GradCheckCase {
  std::string name;
  double max_rel_err = 0.0;
  int configs = 0;
};

// The full (layer, activation, loss) sweep for both scalar types.
std::vector<GradCheckCase> run_gradcheck_suite(int configs_per_combo = 10,
                                               double eps = 1e-5,
                                               std::uint64_t seed = 2024);

}  // namespace nqr::nn
