#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ccsym/error.hpp"

namespace ccsym {

using Rational = mpq_class;

/// Reduced fraction with canonical sign (denominator > 0).
Rational make_rational(std::int64_t num, std::int64_t den);

enum class RingKind {
  prime_field,       // F_p
  mod_prime_power,   // Z/p^k
  rationals,         // Q
  truncated,         // B[e]/e^nu, B a prime field or Q
};

class Ring;
class RingElement;
using RingPtr = std::shared_ptr<const Ring>;

/// An artinian local coefficient ring.  All supported rings have maximal
/// ideal m consisting exactly of the non-units, with m^nu = 0.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  static RingPtr prime_field(std::int64_t p);
  static RingPtr mod_prime_power(std::int64_t p, int k);
  static RingPtr rationals();
  static RingPtr truncated(const RingPtr& base, int nu);

  RingKind kind() const { return kind_; }
  int nilpotency_index() const { return nu_; }
  bool is_q_algebra() const { return q_algebra_; }
  bool is_field() const { return nu_ == 1; }
  const std::string& description() const { return description_; }

  std::int64_t prime() const { return p_; }          // modular rings and F_p[e] bases
  int prime_exponent() const { return k_; }          // mod_prime_power only
  std::int64_t modulus() const { return modulus_; }  // p^k
  const RingPtr& base() const { return base_; }      // truncated only

  /// Structural equality: same kind and parameters.
  bool equals(const Ring& other) const;

  RingElement zero() const;
  RingElement one() const;
  RingElement from_int(std::int64_t n) const;
  RingElement from_rational(const Rational& q) const;  // exact; unit-denominator division elsewhere
  /// n * d^{-1}; requires d to map to a unit.
  RingElement from_fraction(std::int64_t n, std::int64_t d) const;
  /// The nilpotent generator e of a truncated algebra.
  RingElement epsilon() const;
  /// Truncated algebras only: the element sum_i v[i] e^i from base-ring coefficients.
  RingElement from_coeff_vector(std::vector<RingElement> v) const;

  RingElement add(const RingElement& x, const RingElement& y) const;
  RingElement sub(const RingElement& x, const RingElement& y) const;
  RingElement mul(const RingElement& x, const RingElement& y) const;
  RingElement neg(const RingElement& x) const;

  bool is_zero(const RingElement& x) const;
  bool is_one(const RingElement& x) const;
  bool is_unit(const RingElement& x) const;
  bool in_maximal_ideal(const RingElement& x) const { return !is_unit(x); }
  /// Membership in m^j (j >= 0; m^0 = whole ring).
  bool in_ideal_power(const RingElement& x, int j) const;

  RingElement invert_unit(const RingElement& x) const;
  /// Smallest n >= 1 with x^n = 0, or nullopt when x is not nilpotent.
  std::optional<int> nilpotency_order(const RingElement& x) const;
  /// Unique y with n*y = x; requires a Q-algebra.
  RingElement div_by_integer(const RingElement& x, std::int64_t n) const;
  RingElement pow(const RingElement& x, std::int64_t e) const;

  std::string to_string(const RingElement& x) const;

 private:
  Ring() = default;

  RingKind kind_ = RingKind::rationals;
  std::int64_t p_ = 0;
  int k_ = 0;
  int nu_ = 1;
  std::int64_t modulus_ = 0;
  bool q_algebra_ = false;
  RingPtr base_;
  std::string description_;

  friend class RingElement;
};

class RingElement {
 public:
  using Coeffs = std::vector<RingElement>;
  using Payload = std::variant<std::int64_t, Rational, Coeffs>;

  RingElement() = default;  // invalid placeholder; any use through a Ring asserts

  RingElement(RingPtr ring, Payload payload)
      : ring_(std::move(ring)), payload_(std::move(payload)) {}

  const RingPtr& ring() const { return ring_; }
  bool valid() const { return ring_ != nullptr; }
  const Payload& payload() const { return payload_; }

  bool is_zero() const { return ring_->is_zero(*this); }
  bool is_one() const { return ring_->is_one(*this); }
  bool is_unit() const { return ring_->is_unit(*this); }
  bool in_maximal_ideal() const { return ring_->in_maximal_ideal(*this); }
  RingElement inverse() const { return ring_->invert_unit(*this); }
  RingElement pow(std::int64_t e) const { return ring_->pow(*this, e); }
  std::string str() const { return ring_->to_string(*this); }

  friend RingElement operator+(const RingElement& a, const RingElement& b) {
    return a.ring_->add(a, b);
  }
  friend RingElement operator-(const RingElement& a, const RingElement& b) {
    return a.ring_->sub(a, b);
  }
  friend RingElement operator*(const RingElement& a, const RingElement& b) {
    return a.ring_->mul(a, b);
  }
  friend RingElement operator-(const RingElement& a) { return a.ring_->neg(a); }

  /// Canonical-form equality; mixing rings is a hard error, never false.
  friend bool operator==(const RingElement& a, const RingElement& b);
  friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

 private:
  RingPtr ring_;
  Payload payload_;
};

/// Canonical reduction homomorphism: Z/p^k -> Z/p^j (j <= k, F_p allowed as
/// the j = 1 target), B[e]/e^nu -> B[e]/e^nu' (nu' <= nu, B itself allowed
/// as the nu' = 1 target), or the identity.  Anything else is refused.
RingElement apply_hom(const RingElement& x, const RingPtr& target);
bool has_hom(const Ring& source, const Ring& target);

bool same_ring(const RingElement& a, const RingElement& b);
void require_same_ring(const RingElement& a, const RingElement& b, const char* where);

}  // namespace ccsym
