#pragma once

#include <cstdint>

#include "ccsym/laurent.hpp"

namespace ccsym {

/// Tiny deterministic generator; fixed algorithm so that seeded runs are
/// byte-identical across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : next() % n; }

  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(unsigned percent) { return below(100) < percent; }

 private:
  std::uint64_t state_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

RingElement random_element(const RingPtr& ring, SplitMix64& rng);
RingElement random_unit(const RingPtr& ring, SplitMix64& rng);
RingElement random_in_m(const RingPtr& ring, SplitMix64& rng);

/// Generator profiles for invertible series; they mirror the case split used
/// by the Steinberg verification suites.
enum class SeriesProfile {
  any_gamma,
  pos_winding,
  neg_winding,
  zero_winding_unit_coeff,  // w = 0 with a unit coefficient at some i > 0
  zero_winding_nilpotent,   // w = 0 with every off-zero coefficient in m
  one_plus_nilpotent,       // f - 1 has every coefficient in m
};

const char* profile_name(SeriesProfile p);

/// Seeded, reproducible series in Gamma matching the profile; support within
/// [-4, 6].  Resamples until the classification confirms the request.
LaurentSeries random_gamma_series(const RingPtr& ring, SeriesProfile profile, std::uint64_t seed);

/// A profile draw constrained so that 1 - f is invertible too.  Profiles can
/// be empty under that constraint (residue characteristic 2 kills the
/// all-nilpotent case), so after enough rejections this falls back to
/// positive winding, which always admits valid pairs.
LaurentSeries random_steinberg_input(const RingPtr& ring, SeriesProfile profile, SplitMix64& rng);

}  // namespace ccsym
