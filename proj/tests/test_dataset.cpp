#include <doctest.h>

#include <cmath>
#include <fstream>

#include "nqr/container.hpp"
#include "nqr/dataset.hpp"
#include "nqr/noise.hpp"
#include "nqr/rng.hpp"
#include "support.hpp"

using namespace nqr;

namespace {

DatasetConfig tiny_config(std::uint64_t seed = 1234) {
  DatasetConfig c;
  c.sizes = {20, 6, 6};
  c.master_seed = seed;
  return c;
}

bool splits_equal(const Split& a, const Split& b) {
  auto eq = [](const std::vector<LabeledExample>& x,
               const std::vector<LabeledExample>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].clean != y[i].clean || x[i].noisy != y[i].noisy) return false;
      if (x[i].params.amplitude != y[i].params.amplitude ||
          x[i].params.sigma != y[i].params.sigma ||
          x[i].params.t2 != y[i].params.t2 ||
          x[i].params.phase != y[i].params.phase ||
          x[i].params.freq_hz != y[i].params.freq_hz)
        return false;
    }
    return true;
  };
  return eq(a.train, b.train) && eq(a.val, b.val) && eq(a.test, b.test);
}

}  // namespace

TEST_SUITE_BEGIN("dataset");

TEST_CASE("build respects sizes, supports, and the additive model") {
  auto split = build_dataset(tiny_config());
  CHECK(split.train.size() == 20);
  CHECK(split.val.size() == 6);
  CHECK(split.test.size() == 6);

  for (const auto& ex : split.train) {
    CHECK(ex.params.freq_hz >= -150.0);
    CHECK(ex.params.freq_hz <= 150.0);
    CHECK(ex.clean.size() == 1024);
    // noisy - clean recovers the standardized noise realization up to
    // float32 storage rounding
    ComplexSeries eps = ex.noisy - ex.clean;
    const double var_re = (eps.real().array() - eps.real().mean()).square().mean();
    const double var_im = (eps.imag().array() - eps.imag().mean()).square().mean();
    CHECK(std::abs(var_re - 1.0) < 1e-4);
    CHECK(std::abs(var_im - 1.0) < 1e-4);
  }
}

TEST_CASE("generation is deterministic given the master seed") {
  auto a = build_dataset(tiny_config(77));
  auto b = build_dataset(tiny_config(77));
  auto c = build_dataset(tiny_config(78));
  CHECK(splits_equal(a, b));
  CHECK_FALSE(splits_equal(a, c));
}

TEST_CASE("ood variants shift frequency or swap noise") {
  auto cfg = tiny_config();
  cfg.f0_hz = 0.0;
  auto shifted = ood_variant(cfg, OodKind::FreqShift);
  CHECK(shifted.f0_hz == 300.0);
  CHECK(shifted.master_seed != cfg.master_seed);
  auto cfg1600 = cfg;
  cfg1600.f0_hz = 1600.0;
  CHECK(ood_variant(cfg1600, OodKind::FreqShift).f0_hz == 1900.0);

  auto swapped = ood_variant(cfg, OodKind::NoiseSwap);
  CHECK(std::holds_alternative<SurrogateColored>(swapped.noise));
  auto back = ood_variant(swapped, OodKind::NoiseSwap);
  CHECK(std::holds_alternative<WhiteGaussian>(back.noise));
  CHECK(back.master_seed == cfg.master_seed);
  CHECK(back.f0_hz == cfg.f0_hz);
}

TEST_CASE("dataset files round trip bit-exactly") {
  auto split = build_dataset(tiny_config(5));
  testsupport::TempFile file("ds.nqr");
  write_dataset(split, file.path());

  auto loaded = read_dataset(file.path());
  CHECK(splits_equal(split, loaded));
  CHECK(loaded.config.master_seed == split.config.master_seed);

  testsupport::TempFile file2("ds2.nqr");
  write_dataset(loaded, file2.path());
  std::ifstream a(file.path(), std::ios::binary), b(file2.path(), std::ios::binary);
  std::string sa((std::istreambuf_iterator<char>(a)), {});
  std::string sb((std::istreambuf_iterator<char>(b)), {});
  CHECK(sa == sb);

  SUBCASE("corrupted payload byte fails the checksum") {
    std::fstream f(file.path(), std::ios::binary | std::ios::in | std::ios::out);
    f.seekp(-4, std::ios::end);
    char c = 0x7F;
    f.write(&c, 1);
    f.close();
    CHECK_THROWS_WITH_AS(read_dataset(file.path()),
                         doctest::Contains("checksum"), std::runtime_error);
  }
  SUBCASE("a noise bank is rejected as a dataset") {
    NoiseBank bank;
    auto rng = nqr::rng::stream(1, nqr::rng::kNoise);
    bank.records.push_back(white_noise(rng, NoiseBank::kRecordLength));
    bank.records.push_back(white_noise(rng, NoiseBank::kRecordLength));
    bank.records.push_back(white_noise(rng, NoiseBank::kRecordLength));
    testsupport::TempFile bf("bank.nqr");
    save_noise_bank(bank, bf.path());
    CHECK_THROWS_WITH_AS(read_dataset(bf.path()), doctest::Contains("type"),
                         std::runtime_error);
  }
}

TEST_CASE("series files round trip") {
  auto rng = nqr::rng::stream(9, nqr::rng::kNoise);
  std::vector<ComplexSeries> series;
  for (int i = 0; i < 3; ++i) {
    ComplexSeries s = white_noise(rng, 1024);
    for (Eigen::Index k = 0; k < s.size(); ++k)
      s(k) = {static_cast<float>(s(k).real()), static_cast<float>(s(k).imag())};
    series.push_back(s);
  }
  testsupport::TempFile file("series.nqr");
  write_series(series, TimeGrid{}, file.path());
  auto [loaded, grid] = read_series(file.path());
  REQUIRE(loaded.size() == 3);
  CHECK(grid.n_samples == 1024);
  for (int i = 0; i < 3; ++i) CHECK(loaded[static_cast<std::size_t>(i)] == series[static_cast<std::size_t>(i)]);
}

TEST_CASE("measured-bank datasets draw from the right partition") {
  NoiseBank bank;
  auto rng = nqr::rng::stream(31, nqr::rng::kNoise);
  for (int i = 0; i < 10; ++i)
    bank.records.push_back(white_noise(rng, NoiseBank::kRecordLength));
  testsupport::TempFile bf("bank.nqr");
  save_noise_bank(bank, bf.path());

  DatasetConfig cfg = tiny_config(3);
  cfg.sizes = {8, 3, 3};
  cfg.noise = MeasuredBank{bf.path()};
  auto split = build_dataset(cfg);
  CHECK(split.train.size() == 8);
  for (const auto& ex : split.test) {
    ComplexSeries eps = ex.noisy - ex.clean;
    const double var_re = (eps.real().array() - eps.real().mean()).square().mean();
    CHECK(std::abs(var_re - 1.0) < 1e-4);
  }

  DatasetConfig missing = cfg;
  missing.noise = MeasuredBank{"/nonexistent/bank.nqr"};
  CHECK_THROWS(build_dataset(missing));
}

TEST_SUITE_END();
