#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccsym/cohomology.hpp"

namespace ccsym {

/// Outcome of one seeded verification suite.  Failure lines carry a
/// self-contained reproduction command.
struct SuiteResult {
  std::string name;
  std::string ring;
  int trials = 0;
  int failures = 0;
  std::vector<std::string> failure_lines;

  bool passed() const { return failures == 0; }
};

SuiteResult check_steinberg(const RingPtr& ring, int trials, std::uint64_t seed);
SuiteResult check_bimult(const RingPtr& ring, int trials, std::uint64_t seed);
SuiteResult check_antisym(const RingPtr& ring, int trials, std::uint64_t seed);
SuiteResult check_tame(const RingPtr& ring, int trials, std::uint64_t seed);
SuiteResult check_residue(const RingPtr& ring, int trials, std::uint64_t seed);
SuiteResult check_adjunction(const RingPtr& ring, const LaurentSeries& phi, int trials,
                             std::uint64_t seed);
SuiteResult check_reparam(const RingPtr& ring, const LaurentSeries& tau, int trials,
                          std::uint64_t seed);
SuiteResult check_cocycle(const RingPtr& ring, const PairingHandle& pairing, int trials,
                          std::uint64_t seed);
SuiteResult check_characterization(const RingPtr& ring, int trials, std::uint64_t seed);

/// <f o tau, g o tau> computed at whatever precision the symbol demands.
SymbolValue symbol_after_reparam(const LaurentSeries& f, const LaurentSeries& g,
                                 const LaurentSeries& tau);

}  // namespace ccsym
