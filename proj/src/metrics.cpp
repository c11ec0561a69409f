#include "nqr/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace nqr {

double scaled_r2(const std::vector<ComplexSeries>& truths,
                 const std::vector<ComplexSeries>& preds) {
  if (truths.size() != preds.size() || truths.empty())
    throw std::invalid_argument("scaled_r2: shape mismatch");
  double residual = 0.0;
  double signal = 0.0;
  for (std::size_t i = 0; i < truths.size(); ++i) {
    if (truths[i].size() != preds[i].size())
      throw std::invalid_argument("scaled_r2: shape mismatch");
    residual += (truths[i] - preds[i]).squaredNorm();
    signal += truths[i].squaredNorm();
  }
  if (signal <= 0.0) throw std::invalid_argument("scaled_r2: all-zero truths");
  return 100.0 * (1.0 - residual / signal);
}

double rescaled_mse(const std::vector<ComplexSeries>& truths,
                    const std::vector<ComplexSeries>& preds,
                    const std::vector<double>& amplitudes) {
  if (truths.size() != preds.size() || truths.size() != amplitudes.size() ||
      truths.empty())
    throw std::invalid_argument("rescaled_mse: shape mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < truths.size(); ++i) {
    if (truths[i].size() != preds[i].size())
      throw std::invalid_argument("rescaled_mse: shape mismatch");
    const double a = amplitudes[i];
    if (!(a > 0.0)) throw std::invalid_argument("rescaled_mse: zero amplitude");
    acc += (truths[i] - preds[i]).squaredNorm() /
           (a * a * static_cast<double>(truths[i].size()));
  }
  return acc / static_cast<double>(truths.size());
}

std::pair<double, double> ensemble_stats(const std::vector<double>& per_member) {
  if (per_member.empty())
    throw std::invalid_argument("ensemble_stats: empty member list");
  const auto n = static_cast<double>(per_member.size());
  double mean = 0.0;
  for (double v : per_member) mean += v;
  mean /= n;
  if (per_member.size() == 1) return {mean, 0.0};
  double ss = 0.0;
  for (double v : per_member) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / (n - 1.0))};
}

}  // namespace nqr
