#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <random>
#include <string>

namespace testsupport {

// Radix-2 in-place FFT, for periodogram checks only.
inline void fft(Eigen::VectorXcd& a) {
  const Eigen::Index n = a.size();
  for (Eigen::Index i = 1, j = 0; i < n; ++i) {
    Eigen::Index bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a(i), a(j));
  }
  for (Eigen::Index len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (Eigen::Index i = 0; i < n; i += len) {
      std::complex<double> w(1.0);
      for (Eigen::Index k = 0; k < len / 2; ++k) {
        const auto u = a(i + k);
        const auto v = a(i + k + len / 2) * w;
        a(i + k) = u + v;
        a(i + k + len / 2) = u - v;
        w *= wl;
      }
    }
  }
}

inline Eigen::ArrayXd periodogram(const Eigen::VectorXcd& x) {
  Eigen::VectorXcd spec = x;
  fft(spec);
  return spec.array().abs2() / static_cast<double>(x.size());
}

// Scratch file path inside the build tree; removed by the destructor.
class TempFile {
 public:
  explicit TempFile(const std::string& name) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("nqr_test_" + std::to_string(::getpid()) + "_" +
              std::to_string(counter++) + "_" + name))
                .string();
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

inline Eigen::VectorXcd random_complex(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = {g(rng), g(rng)};
  return v;
}

}  // namespace testsupport
