#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "nqr/dataset.hpp"

namespace nqr {

std::uint32_t crc32(const void* data, std::size_t len,
                    std::uint32_t crc = 0);

/// Header fields of any .nqr container, read without touching the payload.
struct ContainerInfo {
  int version = 0;
  std::string type;  // "dataset" | "noisebank" | "series"
  TimeGrid grid;
  Eigen::Index records = 0;
  std::uint32_t payload_crc32 = 0;
  nlohmann::json config;
};

ContainerInfo peek_container(const std::string& path);

nlohmann::json to_json(const NoiseKind& kind);
NoiseKind noise_kind_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DatasetConfig& config);
DatasetConfig dataset_config_from_json(const nlohmann::json& j);

}  // namespace nqr
