#pragma once

#include "ccsym/witt.hpp"

namespace ccsym {

/// A pairing value; always a unit of the coefficient ring.
struct SymbolValue {
  RingElement value;

  bool operator==(const SymbolValue& other) const { return value == other.value; }
  std::string str() const { return value.str(); }
};

/// A reparameterization phi with positive winding number n, viewed as making
/// A((t)) a free rank-n module over the subring of series in u = phi(t).
struct NormContext {
  LaurentSeries phi;
  long n;

  explicit NormContext(LaurentSeries phi_);
};

/// Smallest K such that every factor of the defining double product with
/// positive index above K is exactly 1, for either orientation of (f, g).
long required_pos_bound(const LaurentSeries& f, const LaurentSeries& g);

/// The commutator pairing {f, g}: the signed-product-free part of the symbol.
SymbolValue commutator_pairing(const LaurentSeries& f, const LaurentSeries& g);

/// The Contou-Carrere symbol <f, g> = (-1)^{w(f) w(g)} {f, g}.
SymbolValue cc_symbol(const LaurentSeries& f, const LaurentSeries& g);

/// Milnor's tame symbol over a field, computed from leading coefficients:
/// (-1)^{w(f) w(g)} lc(f)^{w(g)} / lc(g)^{w(f)}.
SymbolValue tame_symbol(const LaurentSeries& f, const LaurentSeries& g);

/// Deligne's residue formula exp(Res[log f * dlog g]) for f in 1 + m((t))
/// over a Q-algebra; agrees exactly with cc_symbol on its domain.
SymbolValue residue_symbol(const LaurentSeries& f, const LaurentSeries& g);

/// Determinant of multiplication by f on A((t)) over the phi-subring,
/// written again as a series in t, provably correct through prec.
LaurentSeries norm_map(const NormContext& ctx, const LaurentSeries& f, long prec);

/// Checks <f, g o phi> = <N_phi[f], g> exactly.
bool verify_adjunction(const LaurentSeries& f, const LaurentSeries& g, const NormContext& ctx);

}  // namespace ccsym
