#include "ccsym/sampler.hpp"

namespace ccsym {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  SplitMix64 rng(seed ^ (salt * 0xD6E8FEB86659FD93ull));
  return rng.next();
}

RingElement random_element(const RingPtr& ring, SplitMix64& rng) {
  switch (ring->kind()) {
    case RingKind::prime_field:
    case RingKind::mod_prime_power:
      return ring->from_int(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(ring->modulus()))));
    case RingKind::rationals: {
      static const long dens[] = {1, 1, 2, 3, 5};
      long num = rng.range(-6, 6);
      long den = dens[rng.below(5)];
      return ring->from_rational(make_rational(num, den));
    }
    case RingKind::truncated: {
      std::vector<RingElement> v;
      v.reserve(static_cast<size_t>(ring->nilpotency_index()));
      for (int i = 0; i < ring->nilpotency_index(); ++i) v.push_back(random_element(ring->base(), rng));
      return ring->from_coeff_vector(std::move(v));
    }
  }
  fail(errc::internal_error, "bad ring kind");
}

RingElement random_unit(const RingPtr& ring, SplitMix64& rng) {
  switch (ring->kind()) {
    case RingKind::prime_field:
      return ring->from_int(1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(ring->modulus() - 1))));
    case RingKind::mod_prime_power: {
      for (int i = 0; i < 256; ++i) {
        RingElement x = random_element(ring, rng);
        if (x.is_unit()) return x;
      }
      fail(errc::internal_error, "unit sampling exhausted");
    }
    case RingKind::rationals: {
      RingElement x = random_element(ring, rng);
      return x.is_zero() ? ring->one() : x;
    }
    case RingKind::truncated: {
      std::vector<RingElement> v;
      v.reserve(static_cast<size_t>(ring->nilpotency_index()));
      v.push_back(random_unit(ring->base(), rng));
      for (int i = 1; i < ring->nilpotency_index(); ++i) v.push_back(random_element(ring->base(), rng));
      return ring->from_coeff_vector(std::move(v));
    }
  }
  fail(errc::internal_error, "bad ring kind");
}

RingElement random_in_m(const RingPtr& ring, SplitMix64& rng) {
  switch (ring->kind()) {
    case RingKind::prime_field:
    case RingKind::rationals:
      return ring->zero();
    case RingKind::mod_prime_power: {
      std::int64_t p = ring->prime();
      std::int64_t q = ring->modulus() / p;
      return ring->from_int(p * static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(q))));
    }
    case RingKind::truncated: {
      std::vector<RingElement> v;
      v.reserve(static_cast<size_t>(ring->nilpotency_index()));
      v.push_back(ring->base()->zero());
      for (int i = 1; i < ring->nilpotency_index(); ++i) v.push_back(random_element(ring->base(), rng));
      return ring->from_coeff_vector(std::move(v));
    }
  }
  fail(errc::internal_error, "bad ring kind");
}

const char* profile_name(SeriesProfile p) {
  switch (p) {
    case SeriesProfile::any_gamma: return "anyGamma";
    case SeriesProfile::pos_winding: return "posWinding";
    case SeriesProfile::neg_winding: return "negWinding";
    case SeriesProfile::zero_winding_unit_coeff: return "zeroWindingUnitCoeff";
    case SeriesProfile::zero_winding_nilpotent: return "zeroWindingNilpotent";
    case SeriesProfile::one_plus_nilpotent: return "onePlusNilpotent";
  }
  return "?";
}

namespace {

bool confirms_profile(const LaurentSeries& f, SeriesProfile profile) {
  GammaClass cls = f.classify_gamma();
  if (!cls.invertible) return false;
  switch (profile) {
    case SeriesProfile::any_gamma:
      return true;
    case SeriesProfile::pos_winding:
      return cls.w >= 1;
    case SeriesProfile::neg_winding:
      return cls.w <= -1;
    case SeriesProfile::zero_winding_unit_coeff: {
      if (cls.w != 0) return false;
      for (const auto& [e, c] : f.coeffs())
        if (e > 0 && c.is_unit()) return true;
      return false;
    }
    case SeriesProfile::zero_winding_nilpotent: {
      if (cls.w != 0) return false;
      for (const auto& [e, c] : f.coeffs())
        if (e != 0 && !c.in_maximal_ideal()) return false;
      return true;
    }
    case SeriesProfile::one_plus_nilpotent: {
      LaurentSeries h = f - LaurentSeries::one(f.ring());
      for (const auto& [e, c] : h.coeffs())
        if (!c.in_maximal_ideal()) return false;
      return true;
    }
  }
  return false;
}

}  // namespace

LaurentSeries random_gamma_series(const RingPtr& ring, SeriesProfile profile, std::uint64_t seed) {
  SplitMix64 rng(mix_seed(seed, 0x5e12e5));
  constexpr long kLo = -4, kHi = 6;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    long w = 0;
    switch (profile) {
      case SeriesProfile::any_gamma: w = rng.range(-2, 2); break;
      case SeriesProfile::pos_winding: w = rng.range(1, 3); break;
      case SeriesProfile::neg_winding: w = rng.range(-3, -1); break;
      default: w = 0; break;
    }
    LaurentSeries::CoeffMap m;
    bool nilpotent_flavor = profile == SeriesProfile::zero_winding_nilpotent ||
                            profile == SeriesProfile::one_plus_nilpotent;
    for (long e = kLo; e <= kHi; ++e) {
      if (e == w) continue;
      if (!rng.chance(35)) continue;
      RingElement c = (e < w || nilpotent_flavor) ? random_in_m(ring, rng) : random_element(ring, rng);
      if (!c.is_zero()) m.emplace(e, c);
    }
    RingElement pivot = random_unit(ring, rng);
    if (profile == SeriesProfile::one_plus_nilpotent)
      pivot = ring->one() + random_in_m(ring, rng);
    m.erase(w);
    if (!pivot.is_zero()) m.emplace(w, pivot);
    if (profile == SeriesProfile::zero_winding_unit_coeff) {
      long i = rng.range(1, 4);
      m.erase(i);
      m.emplace(i, random_unit(ring, rng));
    }
    LaurentSeries f(ring, std::move(m));
    if (confirms_profile(f, profile)) return f;
  }
  fail(errc::internal_error, std::string("series generator exhausted for profile ") + profile_name(profile));
}

LaurentSeries random_steinberg_input(const RingPtr& ring, SeriesProfile profile, SplitMix64& rng) {
  const LaurentSeries one = LaurentSeries::one(ring);
  for (int attempt = 0; attempt < 200; ++attempt) {
    LaurentSeries f = random_gamma_series(ring, profile, rng.next());
    if ((one - f).classify_gamma().invertible) return f;
  }
  for (;;) {
    LaurentSeries f = random_gamma_series(ring, SeriesProfile::pos_winding, rng.next());
    if ((one - f).classify_gamma().invertible) return f;
  }
}

}  // namespace ccsym
