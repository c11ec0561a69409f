#include "nqr/signal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nqr {

std::pair<double, double> amplitude_support(SnrRegime regime) {
  return regime == SnrRegime::Low ? std::pair{0.1, 1.0} : std::pair{2.1, 3.0};
}

ComplexSeries voigt_signal(const VoigtParams& params, const TimeGrid& grid) {
  const bool finite = std::isfinite(params.amplitude) &&
                      std::isfinite(params.sigma) && std::isfinite(params.t2) &&
                      std::isfinite(params.phase) && std::isfinite(params.freq_hz);
  if (!finite) throw std::invalid_argument("voigt_signal: non-finite parameter");
  if (params.amplitude <= 0 || params.sigma <= 0 || params.t2 <= 0)
    throw std::invalid_argument("voigt_signal: A, sigma, T2 must be positive");
  if (grid.n_samples <= 0 || grid.dt <= 0)
    throw std::invalid_argument("voigt_signal: invalid grid");

  const Eigen::ArrayXd t = grid.times();
  const Eigen::ArrayXd envelope =
      params.amplitude *
      (-t.square() / (2.0 * params.sigma * params.sigma) - t / params.t2).exp();
  const Eigen::ArrayXd angle =
      2.0 * std::numbers::pi * params.freq_hz * t + params.phase;

  ComplexSeries out(grid.n_samples);
  out.real() = (envelope * angle.cos()).matrix();
  out.imag() = (envelope * angle.sin()).matrix();
  return out;
}

VoigtParams sample_voigt_params(std::mt19937_64& rng, double f0_hz,
                                SnrRegime regime) {
  if (!std::isfinite(f0_hz))
    throw std::invalid_argument("sample_voigt_params: f0 must be finite");
  const auto [a_lo, a_hi] = amplitude_support(regime);
  std::uniform_real_distribution<double> amp(a_lo, a_hi);
  std::uniform_real_distribution<double> decay(1e-3, 1e-2);
  std::uniform_real_distribution<double> phase(-std::numbers::pi,
                                               std::numbers::pi);
  std::uniform_real_distribution<double> freq(f0_hz - 150.0, f0_hz + 150.0);

  VoigtParams p;
  p.amplitude = amp(rng);
  p.sigma = decay(rng);
  p.t2 = decay(rng);
  p.phase = phase(rng);
  p.freq_hz = freq(rng);
  return p;
}

SnrStats snr_stats(const ComplexSeries& clean, const ComplexSeries& noise) {
  if (clean.size() != noise.size() || clean.size() == 0)
    throw std::invalid_argument("snr_stats: length mismatch");
  SnrStats s;
  s.p_signal = clean.squaredNorm() / static_cast<double>(clean.size());
  s.p_noise = noise.squaredNorm() / static_cast<double>(noise.size());
  if (s.p_noise <= 0.0)
    throw std::runtime_error("snr_stats: zero-power noise, SNR undefined");
  s.snr_db = 10.0 * std::log10(s.p_signal / s.p_noise);
  return s;
}

}  // namespace nqr
