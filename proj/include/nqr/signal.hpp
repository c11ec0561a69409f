#pragma once

#include <Eigen/Dense>
#include <random>

namespace nqr {

using ComplexSeries = Eigen::VectorXcd;

/// Uniform acquisition grid t_k = k*dt, k = 0..n_samples-1.
struct TimeGrid {
  Eigen::Index n_samples = 1024;
  double dt = 1.8e-5;

  Eigen::ArrayXd times() const {
    return Eigen::ArrayXd::LinSpaced(n_samples, 0.0,
                                     dt * static_cast<double>(n_samples - 1));
  }
  bool operator==(const TimeGrid&) const = default;
};

/// Generative parameters of one decaying complex exponential.
struct VoigtParams {
  double amplitude = 1.0;  // A > 0
  double sigma = 5e-3;     // Gaussian decay scale, seconds
  double t2 = 5e-3;        // exponential decay time, seconds
  double phase = 0.0;      // radians
  double freq_hz = 0.0;
};

enum class SnrRegime { Low, High };

struct SnrStats {
  double p_signal = 0.0;
  double p_noise = 0.0;
  double snr_db = 0.0;
};

/// Amplitude sampling interval for a regime: Low ~ U(0.1, 1.0), High ~ U(2.1, 3.0).
std::pair<double, double> amplitude_support(SnrRegime regime);

/// Clean signal A*exp(-t^2/(2 sigma^2) - t/T2) * exp(i(2 pi w t + phi)) on the grid.
/// Throws std::invalid_argument on non-finite or non-positive A/sigma/T2.
ComplexSeries voigt_signal(const VoigtParams& params, const TimeGrid& grid);

/// Draw one parameter set: sigma, T2 ~ U(1e-3, 1e-2), phi ~ U(-pi, pi),
/// w ~ U(f0-150, f0+150), A from the regime's interval.
VoigtParams sample_voigt_params(std::mt19937_64& rng, double f0_hz,
                                SnrRegime regime);

/// Powers are time-means of squared complex magnitude; snr_db = 10 log10(Ps/Pn).
SnrStats snr_stats(const ComplexSeries& clean, const ComplexSeries& noise);

}  // namespace nqr
