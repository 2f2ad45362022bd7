#pragma once

#include <cstdint>
#include <span>

#include "reuleaux/extremal.hpp"

namespace reuleaux {

struct McResult {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t hits = 0;
  double box_volume = 0.0;
};

/// True iff |p - c| <= 1 for every center; no tolerance.
bool membership(std::span<const Vec3> centers, const Vec3& p) noexcept;
bool membership(const PointSet& ps, const Vec3& p) noexcept;

/// Small, fast, well-known generator: xoshiro256** seeded through splitmix64.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed) noexcept;
  std::uint64_t next() noexcept;
  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t s_[4];
};

std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Samples per chunk; chunk k draws from Xoshiro256(chunk_seed(seed, k)).
inline constexpr std::uint64_t kMcChunkSize = 1u << 18;
std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) noexcept;

/// Hit-or-miss volume of the intersection of unit balls about `centers`.
///
/// Samples uniformly from the box where all balls' bounding boxes overlap, which contains the
/// intersection. estimate = box * p, std_error = box * sqrt(p (1 - p) / samples). The result
/// depends only on (centers, samples, seed): chunks are summed in order whatever the thread count.
McResult mc_volume(std::span<const Vec3> centers, std::uint64_t samples, std::uint64_t seed,
                   unsigned threads = 0);
McResult mc_volume(const PointSet& ps, std::uint64_t samples, std::uint64_t seed, unsigned threads = 0);

}  // namespace reuleaux
