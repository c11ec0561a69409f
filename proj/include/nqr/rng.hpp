#pragma once

#include <cstdint>
#include <random>

namespace nqr::rng {

// Stream tags keep derived generators for unrelated purposes statistically
// independent even when they share a master seed and index.
enum : std::uint64_t {
  kParams = 0x5349474e414c5053ULL,
  kNoise = 0x4e4f495345535452ULL,
  kBankSplit = 0x42414e4b53504c54ULL,
  kInit = 0x494e495457454948ULL,
  kShuffle = 0x53485546464c4531ULL,
  kOod = 0x4f4f445345454431ULL,
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag,
                                 std::uint64_t index = 0) {
  return splitmix64(splitmix64(master ^ splitmix64(tag)) ^ index);
}

// Independent generator for (master seed, purpose tag, element index).
inline std::mt19937_64 stream(std::uint64_t master, std::uint64_t tag,
                              std::uint64_t index = 0) {
  return std::mt19937_64(derive_seed(master, tag, index));
}

}  // namespace nqr::rng
