#include "reuleaux/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "reuleaux/errors.hpp"

namespace reuleaux {

bool membership(std::span<const Vec3> centers, const Vec3& p) noexcept {
  for (const auto& c : centers)
    if (norm2(p - c) > 1.0) return false;
  return true;
}

bool membership(const PointSet& ps, const Vec3& p) noexcept { return membership(ps.points(), p); }

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Xoshiro256::Xoshiro256(std::uint64_t seed) noexcept {
  for (auto& word : s_) word = splitmix64(seed);
}

std::uint64_t Xoshiro256::next() noexcept {
  auto rotl = [](std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) noexcept {
  std::uint64_t state = seed;
  const std::uint64_t a = splitmix64(state);
  state = a ^ (chunk * 0xd1342543de82ef95ULL + 1);
  return splitmix64(state);
}

McResult mc_volume(std::span<const Vec3> centers, std::uint64_t samples, std::uint64_t seed,
                   unsigned threads) {
  if (samples < 1) throw DomainError("mc_volume needs at least one sample");
  if (centers.empty()) throw DomainError("mc_volume needs at least one center");

  Vec3 lo{-INFINITY, -INFINITY, -INFINITY};
  Vec3 hi{INFINITY, INFINITY, INFINITY};
  for (const auto& c : centers) {
    lo = {std::max(lo.x, c.x - 1.0), std::max(lo.y, c.y - 1.0), std::max(lo.z, c.z - 1.0)};
    hi = {std::min(hi.x, c.x + 1.0), std::min(hi.y, c.y + 1.0), std::min(hi.z, c.z + 1.0)};
  }
  McResult r;
  r.samples = samples;
  r.seed = seed;
  const Vec3 ext = hi - lo;
  if (!(ext.x > 0.0 && ext.y > 0.0 && ext.z > 0.0)) return r;
  r.box_volume = ext.x * ext.y * ext.z;

  const std::uint64_t chunks = (samples + kMcChunkSize - 1) / kMcChunkSize;
  std::vector<std::uint64_t> hits(chunks, 0);
  auto run_chunk = [&](std::uint64_t k) {
    Xoshiro256 rng(chunk_seed(seed, k));
    const std::uint64_t begin = k * kMcChunkSize;
    const std::uint64_t count = std::min(kMcChunkSize, samples - begin);
    std::uint64_t h = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
      const Vec3 p{lo.x + ext.x * rng.uniform(), lo.y + ext.y * rng.uniform(),
                   lo.z + ext.z * rng.uniform()};
      h += membership(centers, p) ? 1 : 0;
    }
    hits[k] = h;
  };

  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
  if (workers <= 1) {
    for (std::uint64_t k = 0; k < chunks; ++k) run_chunk(k);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::uint64_t k = w; k < chunks; k += workers) run_chunk(k);
      });
  }

  for (auto h : hits) r.hits += h;
  const double p = static_cast<double>(r.hits) / static_cast<double>(samples);
  r.estimate = r.box_volume * p;
  r.std_error = r.box_volume * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  return r;
}

McResult mc_volume(const PointSet& ps, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  return mc_volume(ps.points(), samples, seed, threads);
}

}  // namespace reuleaux
