#include "ccsym/cohomology.hpp"

#include "ccsym/sampler.hpp"

namespace ccsym {

PairingHandle PairingHandle::commutator() {
  return PairingHandle("CommutatorPairing", [](long, long) { return 0L; });
}

PairingHandle PairingHandle::cc() {
  return PairingHandle("CCSymbol", [](long a, long b) { return a * b; });
}

PairingHandle PairingHandle::user_composite(std::string name, std::function<long(long, long)> twist) {
  return PairingHandle(std::move(name), std::move(twist));
}

SymbolValue PairingHandle::evaluate(const LaurentSeries& f, const LaurentSeries& g) const {
  long e = twist_(f.winding_number(), g.winding_number());
  SymbolValue v = commutator_pairing(f, g);
  return (e % 2 != 0) ? SymbolValue{-v.value} : v;
}

CocycleReport check_two_cocycle(const PairingHandle& pairing,
                                const std::vector<std::array<LaurentSeries, 3>>& triples) {
  CocycleReport report;
  for (const auto& [f, g, h] : triples) {
    RingElement lhs = pairing.evaluate(f, g).value * pairing.evaluate(f * g, h).value;
    RingElement rhs = pairing.evaluate(f, g * h).value * pairing.evaluate(g, h).value;
    if (!(lhs == rhs)) report.failures.push_back({report.checked, lhs, rhs});
    ++report.checked;
  }
  return report;
}

RingElement canonical_coboundary(const RingPtr& ring, long alpha, long beta) {
  bool odd = (alpha % 2 != 0) && (beta % 2 != 0);
  return ring->from_int(odd ? -1 : 1);
}

RingElement CoboundaryWitness::phi(long alpha) const {
  long half = alpha * (alpha - 1) / 2;
  RingElement sign = lambda1.ring()->from_int(half % 2 != 0 ? -1 : 1);
  return sign * lambda1.pow(alpha);
}

RingElement coboundary_from_witness(const CoboundaryWitness& w, long alpha, long beta) {
  return w.phi(alpha + beta) * w.phi(alpha).inverse() * w.phi(beta).inverse();
}

namespace {

constexpr SeriesProfile kSteinbergProfiles[] = {
    SeriesProfile::pos_winding,
    SeriesProfile::neg_winding,
    SeriesProfile::zero_winding_unit_coeff,
    SeriesProfile::zero_winding_nilpotent,
};

}  // namespace

SteinbergMapReport check_steinberg_map(const PairingHandle& pairing, const RingPtr& ring,
                                       int trials, std::uint64_t seed) {
  SteinbergMapReport report;
  report.trials = trials;
  const LaurentSeries one = LaurentSeries::one(ring);
  const LaurentSeries t_inv = LaurentSeries::monomial(ring, ring->one(), -1);

  SplitMix64 rng(mix_seed(seed, 0xc0b0));
  for (int i = 0; i < trials; ++i) {
    // Steinberg axiom; the canonical witness 1/t goes first.
    LaurentSeries f = i == 0 ? t_inv
                             : random_steinberg_input(
                                   ring, kSteinbergProfiles[static_cast<size_t>(i) % 4], rng);
    if (report.steinberg.passed) {
      SymbolValue v = pairing.evaluate(f, one - f);
      if (!v.value.is_one()) {
        report.steinberg.passed = false;
        report.steinberg.witness = "f = " + f.str() + ", value = " + v.str();
      }
    }
    LaurentSeries a = random_gamma_series(ring, SeriesProfile::any_gamma, rng.next());
    LaurentSeries b = random_gamma_series(ring, SeriesProfile::any_gamma, rng.next());
    LaurentSeries c = random_gamma_series(ring, SeriesProfile::any_gamma, rng.next());
    if (report.bimultiplicative.passed) {
      RingElement lhs = pairing.evaluate(a, b * c).value;
      RingElement rhs = pairing.evaluate(a, b).value * pairing.evaluate(a, c).value;
      if (!(lhs == rhs)) {
        report.bimultiplicative.passed = false;
        report.bimultiplicative.witness = "f = " + a.str() + ", g = " + b.str() + ", h = " + c.str();
      }
    }
    if (report.antisymmetry.passed) {
      RingElement lhs = pairing.evaluate(a, b).value;
      RingElement rhs = pairing.evaluate(b, a).value.inverse();
      if (!(lhs == rhs)) {
        report.antisymmetry.passed = false;
        report.antisymmetry.witness = "f = " + a.str() + ", g = " + b.str();
      }
    }
    if (report.minus_f.passed) {
      SymbolValue v = pairing.evaluate(a, -a);
      if (!v.value.is_one()) {
        report.minus_f.passed = false;
        report.minus_f.witness = "f = " + a.str() + ", value = " + v.str();
      }
    }
  }
  return report;
}

bool verify_characterization(const LaurentSeries& f, const LaurentSeries& g) {
  long wf = f.winding_number();
  long wg = g.winding_number();
  RingElement cc = cc_symbol(f, g).value;
  RingElement comm = commutator_pairing(f, g).value;
  RingElement cob = canonical_coboundary(f.ring(), wf, wg);
  bool ok = cc == cob * comm;
  if (wf == 0) ok = ok && cc == comm;
  return ok;
}

}  // namespace ccsym
