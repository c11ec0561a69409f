#pragma once

#include <utility>
#include <vector>

#include "nqr/signal.hpp"

namespace nqr {

struct MetricReport {
  double scaled_r2 = 0.0;
  double rescaled_mse_mean = 0.0;  // stored unscaled; reports print x1e3
  double rescaled_mse_sd = 0.0;
  Eigen::Index n_examples = 0;
  Eigen::Index n_members = 0;
};

/// 100 * (1 - sum_i sum_t |y - yhat|^2 / sum_i sum_t |y|^2).
double scaled_r2(const std::vector<ComplexSeries>& truths,
                 const std::vector<ComplexSeries>& preds);

/// Mean over examples of mean over t of |y/A - yhat/A|^2.
double rescaled_mse(const std::vector<ComplexSeries>& truths,
                    const std::vector<ComplexSeries>& preds,
                    const std::vector<double>& amplitudes);

/// Sample mean and SD (n-1 denominator; a single member yields sd = 0).
std::pair<double, double> ensemble_stats(const std::vector<double>& per_member);

}  // namespace nqr
