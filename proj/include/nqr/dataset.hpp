#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nqr/noise.hpp"
#include "nqr/signal.hpp"

namespace nqr {

struct DatasetSizes {
  Eigen::Index train = 6000;
  Eigen::Index val = 2000;
  Eigen::Index test = 2000;
  bool operator==(const DatasetSizes&) const = default;
};

inline DatasetSizes desk_sizes() { return {1500, 500, 500}; }

struct DatasetConfig {
  NoiseKind noise = WhiteGaussian{};
  double f0_hz = 0.0;
  SnrRegime regime = SnrRegime::Low;
  DatasetSizes sizes;
  TimeGrid grid;
  std::uint64_t master_seed = 0;
};

struct LabeledExample {
  ComplexSeries clean;
  ComplexSeries noisy;
  VoigtParams params;
};

struct Split {
  std::vector<LabeledExample> train, val, test;
  DatasetConfig config;
};

/// Generate the full train/val/test realization of a config. Deterministic
/// given master_seed; every stored sample is quantized to float32 so that
/// container round trips are bit-exact.
Split build_dataset(const DatasetConfig& config);

enum class OodKind { NoiseSwap, FreqShift };

/// Derive the out-of-distribution variant of a config: NoiseSwap toggles
/// white <-> surrogate (bank sources swap to white), FreqShift adds +300 Hz.
/// The variant draws fresh noise/parameter streams via a re-derived seed.
DatasetConfig ood_variant(const DatasetConfig& config, OodKind kind);

void write_dataset(const Split& split, const std::string& path);
Split read_dataset(const std::string& path);

/// Bare complex series container (external data for the denoise command).
void write_series(const std::vector<ComplexSeries>& series,
                  const TimeGrid& grid, const std::string& path);
std::pair<std::vector<ComplexSeries>, TimeGrid> read_series(
    const std::string& path);

}  // namespace nqr
