#include "nqr/container.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

static_assert(std::endian::native == std::endian::little,
              "container payload is little-endian");

namespace nqr {

using nlohmann::json;

std::uint32_t crc32(const void* data, std::size_t len, std::uint32_t crc) {
  static const auto table = [] {
    std::array<std::uint32_t, 256> t{};
    for (std::uint32_t i = 0; i < 256; ++i) {
      std::uint32_t c = i;
      for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
      t[i] = c;
    }
    return t;
  }();
  const auto* p = static_cast<const unsigned char*>(data);
  crc = ~crc;
  for (std::size_t i = 0; i < len; ++i) crc = table[(crc ^ p[i]) & 0xFFu] ^ (crc >> 8);
  return ~crc;
}

namespace {

constexpr int kVersion = 1;

void append_f32(std::string& buf, double v) {
  const float f = static_cast<float>(v);
  buf.append(reinterpret_cast<const char*>(&f), sizeof(f));
}

void append_f64(std::string& buf, double v) {
  buf.append(reinterpret_cast<const char*>(&v), sizeof(v));
}

class PayloadReader {
 public:
  PayloadReader(const std::string& buf, const std::string& path)
      : buf_(buf), path_(path) {}

  double f32() {
    float f;
    take(&f, sizeof(f));
    return static_cast<double>(f);
  }
  double f64() {
    double v;
    take(&v, sizeof(v));
    return v;
  }
  void expect_end() const {
    if (pos_ != buf_.size())
      throw std::runtime_error("container: trailing bytes in " + path_);
  }

 private:
  void take(void* out, std::size_t n) {
    if (pos_ + n > buf_.size())
      throw std::runtime_error("container: truncated payload in " + path_);
    std::memcpy(out, buf_.data() + pos_, n);
    pos_ += n;
  }
  const std::string& buf_;
  std::string path_;
  std::size_t pos_ = 0;
};

void append_series_f32(std::string& buf, const ComplexSeries& s) {
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    append_f32(buf, s(k).real());
    append_f32(buf, s(k).imag());
  }
}

ComplexSeries read_series_f32(PayloadReader& r, Eigen::Index n) {
  ComplexSeries s(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double re = r.f32();
    const double im = r.f32();
    s(k) = {re, im};
  }
  return s;
}

void write_container(const std::string& path, const std::string& type,
                     const TimeGrid& grid, Eigen::Index records,
                     const json& config, const std::string& payload) {
  json header = {
      {"version", kVersion},
      {"type", type},
      {"grid", {{"n_samples", grid.n_samples}, {"dt", grid.dt}}},
      {"config", config},
      {"records", records},
      {"payload_crc32", crc32(payload.data(), payload.size())},
  };
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("container: cannot open for write: " + path);
  out << header.dump() << '\n';
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (!out) throw std::runtime_error("container: write failed: " + path);
}

struct LoadedContainer {
  ContainerInfo info;
  std::string payload;
};

ContainerInfo parse_header(const std::string& line, const std::string& path) {
  json header;
  try {
    header = json::parse(line);
  } catch (const json::exception&) {
    throw std::runtime_error("container: malformed header in " + path);
  }
  ContainerInfo info;
  info.version = header.at("version").get<int>();
  if (info.version != kVersion)
    throw std::runtime_error("container: version mismatch in " + path);
  info.type = header.at("type").get<std::string>();
  info.grid.n_samples = header.at("grid").at("n_samples").get<Eigen::Index>();
  info.grid.dt = header.at("grid").at("dt").get<double>();
  info.records = header.at("records").get<Eigen::Index>();
  info.payload_crc32 = header.at("payload_crc32").get<std::uint32_t>();
  info.config = header.at("config");
  return info;
}

LoadedContainer load_container(const std::string& path,
                               const std::string& expected_type) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("container: cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line.empty())
    throw std::runtime_error("container: empty or headerless file " + path);

  LoadedContainer lc;
  lc.info = parse_header(line, path);
  if (lc.info.type != expected_type)
    throw std::runtime_error("container: type tag '" + lc.info.type +
                             "' where '" + expected_type + "' expected in " +
                             path);

  lc.payload.assign(std::istreambuf_iterator<char>(in),
                    std::istreambuf_iterator<char>());
  if (crc32(lc.payload.data(), lc.payload.size()) != lc.info.payload_crc32)
    throw std::runtime_error("container: checksum failure in " + path);
  return lc;
}

std::string regime_name(SnrRegime r) {
  return r == SnrRegime::Low ? "low" : "high";
}

SnrRegime regime_from_name(const std::string& s) {
  if (s == "low") return SnrRegime::Low;
  if (s == "high") return SnrRegime::High;
  throw std::runtime_error("container: unknown regime '" + s + "'");
}

std::string provenance_name(BankProvenance p) {
  switch (p) {
    case BankProvenance::Train: return "train";
    case BankProvenance::Val: return "val";
    case BankProvenance::Test: return "test";
    default: return "unsplit";
  }
}

BankProvenance provenance_from_name(const std::string& s) {
  if (s == "train") return BankProvenance::Train;
  if (s == "val") return BankProvenance::Val;
  if (s == "test") return BankProvenance::Test;
  return BankProvenance::Unsplit;
}

}  // namespace

ContainerInfo peek_container(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("container: cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line.empty())
    throw std::runtime_error("container: empty or headerless file " + path);
  return parse_header(line, path);
}

json to_json(const NoiseKind& kind) {
  if (std::holds_alternative<WhiteGaussian>(kind)) return {{"kind", "white"}};
  if (const auto* bank = std::get_if<MeasuredBank>(&kind))
    return {{"kind", "bank"}, {"path", bank->path}};
  const auto& s = std::get<SurrogateColored>(kind);
  return {{"kind", "surrogate"},
          {"center_hz", s.center_hz},
          {"bandwidth_hz", s.bandwidth_hz},
          {"gain", s.gain}};
}

NoiseKind noise_kind_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "white") return WhiteGaussian{};
  if (kind == "bank") return MeasuredBank{j.at("path").get<std::string>()};
  if (kind == "surrogate") {
    SurrogateColored s;
    s.center_hz = j.at("center_hz").get<double>();
    s.bandwidth_hz = j.at("bandwidth_hz").get<double>();
    s.gain = j.at("gain").get<double>();
    return s;
  }
  throw std::runtime_error("container: unknown noise kind '" + kind + "'");
}

json to_json(const DatasetConfig& c) {
  return {{"noise", to_json(c.noise)},
          {"f0_hz", c.f0_hz},
          {"regime", regime_name(c.regime)},
          {"sizes", {{"train", c.sizes.train}, {"val", c.sizes.val}, {"test", c.sizes.test}}},
          {"grid", {{"n_samples", c.grid.n_samples}, {"dt", c.grid.dt}}},
          {"master_seed", c.master_seed}};
}

DatasetConfig dataset_config_from_json(const json& j) {
  DatasetConfig c;
  c.noise = noise_kind_from_json(j.at("noise"));
  c.f0_hz = j.at("f0_hz").get<double>();
  c.regime = regime_from_name(j.at("regime").get<std::string>());
  c.sizes.train = j.at("sizes").at("train").get<Eigen::Index>();
  c.sizes.val = j.at("sizes").at("val").get<Eigen::Index>();
  c.sizes.test = j.at("sizes").at("test").get<Eigen::Index>();
  if (j.contains("grid")) {
    c.grid.n_samples = j.at("grid").at("n_samples").get<Eigen::Index>();
    c.grid.dt = j.at("grid").at("dt").get<double>();
  }
  if (j.contains("master_seed"))
    c.master_seed = j.at("master_seed").get<std::uint64_t>();
  return c;
}

// --- dataset files ---

void write_dataset(const Split& split, const std::string& path) {
  const TimeGrid& grid = split.config.grid;
  std::string payload;
  const auto total = static_cast<std::size_t>(split.train.size() +
                                              split.val.size() +
                                              split.test.size());
  payload.reserve(total * (static_cast<std::size_t>(grid.n_samples) * 16 + 40));
  auto append_examples = [&](const std::vector<LabeledExample>& v) {
    for (const auto& ex : v) {
      append_series_f32(payload, ex.clean);
      append_series_f32(payload, ex.noisy);
      append_f64(payload, ex.params.amplitude);
      append_f64(payload, ex.params.sigma);
      append_f64(payload, ex.params.t2);
      append_f64(payload, ex.params.phase);
      append_f64(payload, ex.params.freq_hz);
    }
  };
  append_examples(split.train);
  append_examples(split.val);
  append_examples(split.test);
  write_container(path, "dataset", grid, static_cast<Eigen::Index>(total),
                  to_json(split.config), payload);
}

Split read_dataset(const std::string& path) {
  const LoadedContainer lc = load_container(path, "dataset");
  Split split;
  split.config = dataset_config_from_json(lc.info.config);
  split.config.grid = lc.info.grid;
  const auto& sz = split.config.sizes;
  if (sz.train + sz.val + sz.test != lc.info.records)
    throw std::runtime_error("container: record count disagrees with sizes in " + path);

  PayloadReader r(lc.payload, path);
  auto read_examples = [&](std::vector<LabeledExample>& v, Eigen::Index n) {
    v.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
      LabeledExample ex;
      ex.clean = read_series_f32(r, lc.info.grid.n_samples);
      ex.noisy = read_series_f32(r, lc.info.grid.n_samples);
      ex.params.amplitude = r.f64();
      ex.params.sigma = r.f64();
      ex.params.t2 = r.f64();
      ex.params.phase = r.f64();
      ex.params.freq_hz = r.f64();
      v.push_back(std::move(ex));
    }
  };
  read_examples(split.train, sz.train);
  read_examples(split.val, sz.val);
  read_examples(split.test, sz.test);
  r.expect_end();
  return split;
}

// --- noise bank files ---

void save_noise_bank(const NoiseBank& bank, const std::string& path) {
  for (const auto& rec : bank.records)
    if (rec.size() != NoiseBank::kRecordLength)
      throw std::invalid_argument("save_noise_bank: record length must be 16384");
  std::string payload;
  payload.reserve(bank.records.size() *
                  static_cast<std::size_t>(NoiseBank::kRecordLength) * 8);
  for (const auto& rec : bank.records) append_series_f32(payload, rec);
  TimeGrid grid{NoiseBank::kRecordLength, bank.dt};
  write_container(path, "noisebank", grid,
                  static_cast<Eigen::Index>(bank.records.size()),
                  json{{"provenance", provenance_name(bank.provenance)}},
                  payload);
}

NoiseBank load_noise_bank(const std::string& path) {
  {
    std::ifstream probe(path, std::ios::binary | std::ios::ate);
    if (probe && probe.tellg() == std::streamoff{0})
      throw std::runtime_error("load_noise_bank: empty bank file " + path);
  }
  const LoadedContainer lc = load_container(path, "noisebank");
  if (lc.info.grid.n_samples != NoiseBank::kRecordLength)
    throw std::runtime_error("load_noise_bank: wrong record length in " + path);
  if (lc.info.records == 0)
    throw std::runtime_error("load_noise_bank: empty bank " + path);

  NoiseBank bank;
  bank.dt = lc.info.grid.dt;
  bank.provenance =
      provenance_from_name(lc.info.config.value("provenance", "unsplit"));
  PayloadReader r(lc.payload, path);
  bank.records.reserve(static_cast<std::size_t>(lc.info.records));
  for (Eigen::Index i = 0; i < lc.info.records; ++i)
    bank.records.push_back(read_series_f32(r, NoiseBank::kRecordLength));
  r.expect_end();
  return bank;
}

// --- bare series files ---

void write_series(const std::vector<ComplexSeries>& series,
                  const TimeGrid& grid, const std::string& path) {
  std::string payload;
  for (const auto& s : series) {
    if (s.size() != grid.n_samples)
      throw std::invalid_argument("write_series: series length mismatch");
    append_series_f32(payload, s);
  }
  write_container(path, "series", grid,
                  static_cast<Eigen::Index>(series.size()), json::object(),
                  payload);
}

std::pair<std::vector<ComplexSeries>, TimeGrid> read_series(
    const std::string& path) {
  const LoadedContainer lc = load_container(path, "series");
  std::vector<ComplexSeries> out;
  out.reserve(static_cast<std::size_t>(lc.info.records));
  PayloadReader r(lc.payload, path);
  for (Eigen::Index i = 0; i < lc.info.records; ++i)
    out.push_back(read_series_f32(r, lc.info.grid.n_samples));
  r.expect_end();
  return {std::move(out), lc.info.grid};
}

}  // namespace nqr
