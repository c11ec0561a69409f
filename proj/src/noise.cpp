#include "nqr/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace nqr {

ComplexSeries white_noise(std::mt19937_64& rng, Eigen::Index n) {
  if (n <= 0) throw std::invalid_argument("white_noise: n must be positive");
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexSeries out(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    out(k) = {re, im};
  }
  return out;
}

namespace {

double sample_variance(const Eigen::VectorXd& x) {
  const double mean = x.mean();
  return (x.array() - mean).square().mean();
}

}  // namespace

ComplexSeries standardize(ComplexSeries series) {
  const double var_re = sample_variance(series.real());
  const double var_im = sample_variance(series.imag());
  if (var_re <= 0.0 || var_im <= 0.0)
    throw std::runtime_error("standardize: degenerate (constant) component");
  series.real() /= std::sqrt(var_re);
  series.imag() /= std::sqrt(var_im);
  return series;
}

BankSplit split_bank(const NoiseBank& bank, std::uint64_t seed) {
  if (bank.provenance != BankProvenance::Unsplit)
    throw std::invalid_argument("split_bank: bank already split");
  const auto n = static_cast<Eigen::Index>(bank.records.size());
  if (n < 3) throw std::invalid_argument("split_bank: need at least 3 records");

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  const Eigen::Index n_train = (n * 6) / 10;
  const Eigen::Index n_val = (n * 2) / 10;

  BankSplit out;
  out.train.provenance = BankProvenance::Train;
  out.val.provenance = BankProvenance::Val;
  out.test.provenance = BankProvenance::Test;
  out.train.dt = out.val.dt = out.test.dt = bank.dt;
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& rec = bank.records[static_cast<std::size_t>(order[i])];
    if (i < n_train)
      out.train.records.push_back(rec);
    else if (i < n_train + n_val)
      out.val.records.push_back(rec);
    else
      out.test.records.push_back(rec);
  }
  return out;
}

BankDraw draw_bank_segment(const NoiseBank& bank, std::mt19937_64& rng,
                           Eigen::Index n) {
  if (bank.records.empty())
    throw std::invalid_argument("draw_bank_segment: empty bank");
  const Eigen::Index rec_len = bank.records.front().size();
  if (rec_len < n)
    throw std::invalid_argument("draw_bank_segment: record shorter than segment");
  std::uniform_int_distribution<Eigen::Index> rec_dist(
      0, static_cast<Eigen::Index>(bank.records.size()) - 1);
  std::uniform_int_distribution<Eigen::Index> off_dist(0, rec_len - n);
  BankDraw draw;
  draw.record = rec_dist(rng);
  draw.offset = off_dist(rng);
  draw.segment =
      bank.records[static_cast<std::size_t>(draw.record)].segment(draw.offset, n);
  return draw;
}

ComplexSeries surrogate_colored_noise(std::mt19937_64& rng, Eigen::Index n,
                                      const SurrogateColored& spec, double dt) {
  if (spec.gain <= 0.0 || spec.bandwidth_hz <= 0.0)
    throw std::invalid_argument("surrogate_colored_noise: gain and bandwidth must be positive");

  ComplexSeries base = white_noise(rng, n);

  // One-pole complex resonator driven by fresh white noise. The pole radius
  // sets the 3 dB bandwidth, the pole angle the center frequency.
  const double rho = std::exp(-std::numbers::pi * spec.bandwidth_hz * dt);
  const std::complex<double> pole =
      rho * std::exp(std::complex<double>(0.0, 2.0 * std::numbers::pi *
                                                   spec.center_hz * dt));
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double stationary_sd = std::sqrt(1.0 / (1.0 - rho * rho));
  std::complex<double> state(stationary_sd * gauss(rng),
                             stationary_sd * gauss(rng));
  // Filtered component has per-sample power 2/(1-rho^2); beta brings its
  // power to gain times the white component's.
  const double beta = std::sqrt(spec.gain * (1.0 - rho * rho));
  for (Eigen::Index k = 0; k < n; ++k) {
    state = pole * state + std::complex<double>(gauss(rng), gauss(rng));
    base(k) += beta * state;
  }
  return base;
}

ComplexSeries draw_noise_segment(const NoiseKind& kind, const NoiseBank* bank,
                                 std::mt19937_64& rng, Eigen::Index n,
                                 double dt) {
  ComplexSeries raw;
  if (std::holds_alternative<WhiteGaussian>(kind)) {
    raw = white_noise(rng, n);
  } else if (std::holds_alternative<SurrogateColored>(kind)) {
    raw = surrogate_colored_noise(rng, n, std::get<SurrogateColored>(kind), dt);
  } else {
    if (bank == nullptr)
      throw std::invalid_argument("draw_noise_segment: bank source needs a bank");
    raw = draw_bank_segment(*bank, rng, n).segment;
  }
  return standardize(std::move(raw));
}

}  // namespace nqr
