#include "nqr/dataset.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "nqr/rng.hpp"

namespace nqr {

namespace {

ComplexSeries quantize_f32(const ComplexSeries& s) {
  ComplexSeries out(s.size());
  for (Eigen::Index k = 0; k < s.size(); ++k)
    out(k) = {static_cast<double>(static_cast<float>(s(k).real())),
              static_cast<double>(static_cast<float>(s(k).imag()))};
  return out;
}

}  // namespace

Split build_dataset(const DatasetConfig& config) {
  if (config.sizes.train <= 0 || config.sizes.val <= 0 || config.sizes.test <= 0)
    throw std::invalid_argument("build_dataset: sizes must be positive");
  if (!std::isfinite(config.f0_hz))
    throw std::invalid_argument("build_dataset: f0 must be finite");

  // A bank source is split record-level once, before any segmentation.
  std::optional<BankSplit> banks;
  if (const auto* mb = std::get_if<MeasuredBank>(&config.noise)) {
    NoiseBank bank = load_noise_bank(mb->path);
    banks = split_bank(bank, rng::derive_seed(config.master_seed, rng::kBankSplit));
  }

  Split split;
  split.config = config;
  const Eigen::Index n = config.grid.n_samples;

  Eigen::Index global_index = 0;
  auto generate = [&](std::vector<LabeledExample>& out, Eigen::Index count,
                      const NoiseBank* bank) {
    out.reserve(static_cast<std::size_t>(count));
    for (Eigen::Index i = 0; i < count; ++i, ++global_index) {
      auto params_rng = rng::stream(config.master_seed, rng::kParams,
                                    static_cast<std::uint64_t>(global_index));
      auto noise_rng = rng::stream(config.master_seed, rng::kNoise,
                                   static_cast<std::uint64_t>(global_index));
      LabeledExample ex;
      ex.params = sample_voigt_params(params_rng, config.f0_hz, config.regime);
      const ComplexSeries clean = voigt_signal(ex.params, config.grid);
      const ComplexSeries eps =
          draw_noise_segment(config.noise, bank, noise_rng, n, config.grid.dt);
      ex.clean = quantize_f32(clean);
      ex.noisy = quantize_f32(clean + eps);
      out.push_back(std::move(ex));
    }
  };

  generate(split.train, config.sizes.train, banks ? &banks->train : nullptr);
  generate(split.val, config.sizes.val, banks ? &banks->val : nullptr);
  generate(split.test, config.sizes.test, banks ? &banks->test : nullptr);
  return split;
}

DatasetConfig ood_variant(const DatasetConfig& config, OodKind kind) {
  DatasetConfig out = config;
  if (kind == OodKind::FreqShift) {
    out.f0_hz = config.f0_hz + 300.0;
    // Fresh parameter and noise streams for the shifted test band.
    out.master_seed = rng::derive_seed(config.master_seed, rng::kOod);
  } else {
    if (std::holds_alternative<WhiteGaussian>(config.noise))
      out.noise = SurrogateColored{};
    else
      out.noise = WhiteGaussian{};
    // Seed unchanged: the swap is an involution and signal parameters stay
    // paired between the two noise conditions.
  }
  return out;
}

}  // namespace nqr
