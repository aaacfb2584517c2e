#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "ccsym/symbol.hpp"

namespace ccsym {

/// A named pairing A((t))^x x A((t))^x -> A^x.  Built-in handles are the bare
/// commutator pairing and the full symbol; a user composite twists the
/// commutator by (-1)^{table(w(f), w(g))}.
class PairingHandle {
 public:
  static PairingHandle commutator();
  static PairingHandle cc();
  static PairingHandle user_composite(std::string name, std::function<long(long, long)> twist);

  const std::string& name() const { return name_; }
  SymbolValue evaluate(const LaurentSeries& f, const LaurentSeries& g) const;

 private:
  PairingHandle(std::string name, std::function<long(long, long)> twist)
      : name_(std::move(name)), twist_(std::move(twist)) {}

  std::string name_;
  std::function<long(long, long)> twist_;  // sign exponent as a function of windings
};

struct CocycleFailure {
  std::size_t index;
  RingElement lhs;
  RingElement rhs;
};

struct CocycleReport {
  std::size_t checked = 0;
  std::vector<CocycleFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// Verifies c(f,g) c(fg,h) = c(f,gh) c(g,h) for each triple.
CocycleReport check_two_cocycle(const PairingHandle& pairing,
                                const std::vector<std::array<LaurentSeries, 3>>& triples);

/// The 2-coboundary (-1)^{alpha beta} materialized in the coefficient ring.
RingElement canonical_coboundary(const RingPtr& ring, long alpha, long beta);

/// phi(alpha) = (-1)^{alpha(alpha-1)/2} lambda1^alpha; its coboundary is
/// (-1)^{alpha beta} independently of lambda1.
struct CoboundaryWitness {
  RingElement lambda1;  // any unit

  RingElement phi(long alpha) const;
};

RingElement coboundary_from_witness(const CoboundaryWitness& w, long alpha, long beta);

struct AxiomResult {
  bool passed = true;
  std::string witness;  // rendered series/value for the first failure
};

/// Axioms are bimultiplicativity and the Steinberg identity; the two derived
/// properties are reported separately.
struct SteinbergMapReport {
  int trials = 0;
  AxiomResult bimultiplicative;
  AxiomResult steinberg;
  AxiomResult antisymmetry;      // derived
  AxiomResult minus_f;           // derived: psi(f, -f) = 1
  int failing_axioms() const { return (!bimultiplicative.passed ? 1 : 0) + (!steinberg.passed ? 1 : 0); }
  bool axioms_pass() const { return failing_axioms() == 0; }
  bool all_pass() const { return axioms_pass() && antisymmetry.passed && minus_f.passed; }
};

/// Trial 0 of the Steinberg axiom always evaluates the canonical witness
/// f = 1/t, so a failing handle reproduces deterministically.
SteinbergMapReport check_steinberg_map(const PairingHandle& pairing, const RingPtr& ring,
                                       int trials, std::uint64_t seed);

/// The characterization identity: <f,g> equals the canonical coboundary in
/// the windings times {f,g}, and equals {f,g} outright when w(f) = 0.
bool verify_characterization(const LaurentSeries& f, const LaurentSeries& g);

}  // namespace ccsym
