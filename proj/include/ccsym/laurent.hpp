#pragma once

#include <map>
#include <optional>
#include <string>

#include "ccsym/ring.hpp"

namespace ccsym {

/// Classification of a Laurent series against the unit group Gamma(A, m):
/// invertible iff some coefficient a_w is a unit with everything below it in
/// the maximal ideal.
struct GammaClass {
  bool invertible = false;
  long w = 0;
  bool in_gamma0 = false;
  bool in_gamma_plus = false;   // power-series unit (no negative support)
  bool in_gamma_minus = false;  // 1 + nilpotent polynomial in t^{-1}
};

/// Finite-support Laurent series over a coefficient ring.
///
/// A series is either Exact (every unstored coefficient is zero) or
/// TruncatedAt(D): coefficients at exponents > D are unknown.  Every
/// operation propagates the largest provably-correct window; reading an
/// unknown coefficient or comparing across an unknown region throws
/// TruncationTooCoarse rather than guessing.
class LaurentSeries {
 public:
  using CoeffMap = std::map<long, RingElement>;

  explicit LaurentSeries(RingPtr ring) : ring_(std::move(ring)) {}
  LaurentSeries(RingPtr ring, CoeffMap coeffs, std::optional<long> truncated_above = std::nullopt);

  static LaurentSeries zero(const RingPtr& ring) { return LaurentSeries(ring); }
  static LaurentSeries constant(const RingPtr& ring, const RingElement& c);
  static LaurentSeries one(const RingPtr& ring) { return constant(ring, ring->one()); }
  static LaurentSeries monomial(const RingPtr& ring, const RingElement& c, long exponent);
  static LaurentSeries t(const RingPtr& ring) { return monomial(ring, ring->one(), 1); }

  const RingPtr& ring() const { return ring_; }
  const CoeffMap& coeffs() const { return coeffs_; }

  bool is_exact() const { return !trunc_.has_value(); }
  /// Largest exponent with a known coefficient; nullopt when exact.
  std::optional<long> truncation_bound() const { return trunc_; }

  /// Known to be identically zero (requires exactness to certify).
  bool is_known_zero() const { return coeffs_.empty() && is_exact(); }
  /// Least exponent at which the series can be nonzero; nullopt = provably zero.
  std::optional<long> reach() const;
  std::optional<long> min_exponent() const;
  std::optional<long> max_stored_exponent() const;

  /// Coefficient at exponent e; throws when e lies in the unknown region.
  RingElement coeff(long e) const;
  bool knows(long e) const { return !trunc_ || e <= *trunc_; }

  LaurentSeries with_coeff(long e, const RingElement& c) const;

  /// Forget everything above D (marks the series truncated at D).
  LaurentSeries truncate_to(long D) const;
  /// Shift exponents by k (multiplication by t^k).
  LaurentSeries shift(long k) const;
  LaurentSeries scalar_mul(const RingElement& c) const;
  /// Exponents >= 0; inherits the truncation bound.
  LaurentSeries nonneg_part() const;
  /// Exponents < 0; requires them to be fully known, result is exact.
  LaurentSeries negative_part() const;

  friend LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g);
  friend LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g);
  friend LaurentSeries operator-(const LaurentSeries& f);
  friend LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g);

  /// Exact whole-series equality; refuses truncated operands.
  bool equals_exact(const LaurentSeries& other) const;
  /// Coefficientwise agreement on [lo, hi]; both operands must know the window.
  bool agrees_on(const LaurentSeries& other, long lo, long hi) const;
  /// True when the stored window is exactly the constant 1.
  bool looks_like_one() const;

  GammaClass classify_gamma() const;
  long winding_number() const;

  /// Multiplicative inverse, provably correct through exponent prec;
  /// throws TruncationTooCoarse when the input data cannot certify that much.
  LaurentSeries inverse(long prec) const;
  /// Inverse computed with working precision prec; the result carries
  /// whatever window is provable, which may fall short of prec.
  LaurentSeries inverse_upto(long prec) const;
  LaurentSeries derivative() const;
  RingElement residue() const;

  /// Entrywise image under the canonical hom to the target ring.
  LaurentSeries map_ring(const RingPtr& target) const;

  std::string str() const;

 private:
  void normalize();

  RingPtr ring_;
  CoeffMap coeffs_;
  std::optional<long> trunc_;
};

/// Substitution g(phi(t)): requires w(phi) != 0; g must be exact unless
/// w(phi) > 0, in which case an unknown tail of g only pollutes high
/// exponents and the provable window is tracked.
LaurentSeries compose(const LaurentSeries& g, const LaurentSeries& phi, long prec);

/// log(1+h) for h with every coefficient in m: a finite sum by nilpotency.
/// Requires a Q-algebra and an exact argument.
LaurentSeries log_one_plus(const LaurentSeries& h);
/// exp(x) for x with every coefficient in m.
LaurentSeries exp_series(const LaurentSeries& x);

LaurentSeries pow_series(const LaurentSeries& f, long n, long prec);

}  // namespace ccsym
