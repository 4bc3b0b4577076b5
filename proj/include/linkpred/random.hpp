#pragma once

#include <cstdint>
#include <random>

namespace linkpred {

// A reproducible random stream: the master seed of a run plus the index of
// the sub-stream (trial, repeat, ...) drawn from it.
struct RandomSeed {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;

  // Derived 64-bit seed. For a fixed master seed the map index -> seed is
  // injective (an odd-multiplier Weyl step followed by the splitmix64
  // finalizer, both bijections on 64-bit words).
  std::uint64_t derive() const noexcept;

  RandomSeed stream(std::uint64_t index) const noexcept { return {master_seed, index}; }
};

std::uint64_t splitmix64_mix(std::uint64_t x) noexcept;

using Rng = std::mt19937_64;

inline Rng make_rng(const RandomSeed& seed) { return Rng(seed.derive()); }

// Uniform integer in [0, bound). Rejection sampling over raw engine output so
// the sequence does not depend on the standard library's distributions.
std::uint64_t uniform_index(Rng& rng, std::uint64_t bound);

}  // namespace linkpred
