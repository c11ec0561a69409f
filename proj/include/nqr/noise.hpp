#pragma once

#include <random>
#include <string>
#include <variant>
#include <vector>

#include "nqr/signal.hpp"

namespace nqr {

struct WhiteGaussian {
  bool operator==(const WhiteGaussian&) const = default;
};

struct MeasuredBank {
  std::string path;
  bool operator==(const MeasuredBank&) const = default;
};

// White base plus a band-limited component of relative power `gain`,
// centered at `center_hz`. Stands in for recorded interference banks.
struct SurrogateColored {
  double center_hz = 1600.0;
  double bandwidth_hz = 200.0;
  double gain = 0.5;
  bool operator==(const SurrogateColored&) const = default;
};

using NoiseKind = std::variant<WhiteGaussian, MeasuredBank, SurrogateColored>;

enum class BankProvenance { Unsplit, Train, Val, Test };

struct NoiseBank {
  static constexpr Eigen::Index kRecordLength = 16384;
  std::vector<ComplexSeries> records;
  BankProvenance provenance = BankProvenance::Unsplit;
  double dt = 1.8e-5;
};

struct BankSplit {
  NoiseBank train, val, test;
};

/// Complex samples with i.i.d. N(0,1) real and imaginary components.
ComplexSeries white_noise(std::mt19937_64& rng, Eigen::Index n);

/// Rescale each component so its sample variance (1/n convention) is 1.
ComplexSeries standardize(ComplexSeries series);

NoiseBank load_noise_bank(const std::string& path);
void save_noise_bank(const NoiseBank& bank, const std::string& path);

/// Record-level 60/20/20 partition, shuffled deterministically by seed.
BankSplit split_bank(const NoiseBank& bank, std::uint64_t seed);

struct BankDraw {
  ComplexSeries segment;  // raw slice, not standardized
  Eigen::Index record = 0;
  Eigen::Index offset = 0;
};

/// Contiguous within-record slice drawn with replacement over (record, offset).
BankDraw draw_bank_segment(const NoiseBank& bank, std::mt19937_64& rng,
                           Eigen::Index n);

ComplexSeries surrogate_colored_noise(std::mt19937_64& rng, Eigen::Index n,
                                      const SurrogateColored& spec = {},
                                      double dt = 1.8e-5);

/// One standardized noise segment of length n from the given source.
/// `bank` must be the already-split bank for MeasuredBank sources; it is
/// ignored for the synthetic kinds.
ComplexSeries draw_noise_segment(const NoiseKind& kind, const NoiseBank* bank,
                                 std::mt19937_64& rng, Eigen::Index n,
                                 double dt);

}  // namespace nqr
