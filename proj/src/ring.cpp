#include "ccsym/ring.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace ccsym {

const char* errc_name(errc c) {
  switch (c) {
    case errc::unsupported_ring: return "UnsupportedRing";
    case errc::ring_mismatch: return "RingMismatch";
    case errc::not_a_unit: return "NotAUnit";
    case errc::not_q_algebra: return "NotQAlgebra";
    case errc::no_canonical_hom: return "NoCanonicalHom";
    case errc::not_a_unit_series: return "NotAUnitSeries";
    case errc::zero_winding_composition: return "ZeroWindingComposition";
    case errc::truncation_too_coarse: return "TruncationTooCoarse";
    case errc::coefficient_not_nilpotent: return "CoefficientNotNilpotent";
    case errc::not_in_gamma0: return "NotInGamma0";
    case errc::not_in_gamma_plus: return "NotInGammaPlus";
    case errc::not_in_gamma_minus: return "NotInGammaMinus";
    case errc::non_termination: return "NonTermination";
    case errc::not_a_field: return "NotAField";
    case errc::not_one_plus_nilpotent: return "NotOnePlusNilpotent";
    case errc::parse_error: return "ParseError";
    case errc::symbol_not_in_ring: return "SymbolNotInRing";
    case errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(errc::parse_error, "zero denominator");
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Residues live in [0, p^k); p^k is capped so that products fit in int64.
constexpr std::int64_t kModulusCap = std::int64_t(1) << 31;

std::int64_t mod_reduce(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

// Inverse of a mod m for gcd(a, m) = 1, by extended Euclid.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  assert(old_r == 1 || old_r == -1);
  if (old_r == -1) old_s = -old_s;
  return mod_reduce(old_s, m);
}

const std::int64_t& as_residue(const RingElement::Payload& p) { return std::get<std::int64_t>(p); }
const Rational& as_rational(const RingElement::Payload& p) { return std::get<Rational>(p); }
const RingElement::Coeffs& as_coeffs(const RingElement::Payload& p) {
  return std::get<RingElement::Coeffs>(p);
}

}  // namespace

RingPtr Ring::prime_field(std::int64_t p) {
  if (!is_prime(p)) fail(errc::unsupported_ring, "F_p requires p prime, got " + std::to_string(p));
  if (p >= kModulusCap) fail(errc::unsupported_ring, "modulus too large");
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = RingKind::prime_field;
  r->p_ = p;
  r->k_ = 1;
  r->nu_ = 1;
  r->modulus_ = p;
  r->q_algebra_ = false;
  r->description_ = "F" + std::to_string(p);
  return r;
}

RingPtr Ring::mod_prime_power(std::int64_t p, int k) {
  if (!is_prime(p)) fail(errc::unsupported_ring, "Z/p^k requires p prime, got " + std::to_string(p));
  if (k < 1) fail(errc::unsupported_ring, "Z/p^k requires k >= 1");
  std::int64_t m = 1;
  for (int i = 0; i < k; ++i) {
    if (m > kModulusCap / p) fail(errc::unsupported_ring, "modulus too large");
    m *= p;
  }
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = RingKind::mod_prime_power;
  r->p_ = p;
  r->k_ = k;
  r->nu_ = k;
  r->modulus_ = m;
  r->q_algebra_ = false;
  r->description_ = "Z/" + std::to_string(m);
  return r;
}

RingPtr Ring::rationals() {
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = RingKind::rationals;
  r->nu_ = 1;
  r->q_algebra_ = true;
  r->description_ = "Q";
  return r;
}

RingPtr Ring::truncated(const RingPtr& base, int nu) {
  if (!base) fail(errc::unsupported_ring, "null base ring");
  if (base->kind() != RingKind::prime_field && base->kind() != RingKind::rationals)
    fail(errc::unsupported_ring, "truncated algebras take a prime field or Q as base");
  if (nu < 1 || nu > 64) fail(errc::unsupported_ring, "nilpotency index out of range");
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = RingKind::truncated;
  r->base_ = base;
  r->p_ = base->prime();
  r->nu_ = nu;
  r->q_algebra_ = base->is_q_algebra();
  r->description_ = base->description() + "[e]/e^" + std::to_string(nu);
  return r;
}

bool Ring::equals(const Ring& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case RingKind::prime_field: return p_ == o.p_;
    case RingKind::mod_prime_power: return p_ == o.p_ && k_ == o.k_;
    case RingKind::rationals: return true;
    case RingKind::truncated: return nu_ == o.nu_ && base_->equals(*o.base_);
  }
  return false;
}

RingElement Ring::zero() const { return from_int(0); }
RingElement Ring::one() const { return from_int(1); }

RingElement Ring::from_int(std::int64_t n) const {
  auto self = shared_from_this();
  switch (kind_) {
    case RingKind::prime_field:
    case RingKind::mod_prime_power:
      return RingElement(self, mod_reduce(n, modulus_));
    case RingKind::rationals:
      return RingElement(self, Rational(static_cast<long>(n)));
    case RingKind::truncated: {
      RingElement::Coeffs v(static_cast<size_t>(nu_), base_->zero());
      v[0] = base_->from_int(n);
      return RingElement(self, std::move(v));
    }
  }
  fail(errc::internal_error, "bad ring kind");
}

RingElement Ring::from_rational(const Rational& q) const {
  if (kind_ == RingKind::rationals) return RingElement(shared_from_this(), q);
  if (kind_ == RingKind::truncated && base_->kind() == RingKind::rationals) {
    RingElement::Coeffs v(static_cast<size_t>(nu_), base_->zero());
    v[0] = base_->from_rational(q);
    return RingElement(shared_from_this(), v);
  }
  fail(errc::not_q_algebra, "ring " + description_ + " has no exact rationals");
}

RingElement Ring::from_fraction(std::int64_t n, std::int64_t d) const {
  if (d == 0) fail(errc::parse_error, "zero denominator");
  if (q_algebra_) return from_rational(make_rational(n, d));
  return mul(from_int(n), invert_unit(from_int(d)));
}

RingElement Ring::epsilon() const {
  if (kind_ != RingKind::truncated)
    fail(errc::symbol_not_in_ring, "ring " + description_ + " has no nilpotent generator");
  RingElement::Coeffs v(static_cast<size_t>(nu_), base_->zero());
  if (nu_ >= 2) v[1] = base_->one();
  return RingElement(shared_from_this(), std::move(v));
}

RingElement Ring::from_coeff_vector(std::vector<RingElement> v) const {
  if (kind_ != RingKind::truncated)
    fail(errc::unsupported_ring, "coefficient vectors only make sense for truncated algebras");
  if (static_cast<int>(v.size()) > nu_)
    fail(errc::unsupported_ring, "coefficient vector longer than the nilpotency index");
  for (auto& c : v) {
    if (!c.valid() || !c.ring()->equals(*base_))
      fail(errc::ring_mismatch, "coefficient vector entries must lie in the base ring");
  }
  while (static_cast<int>(v.size()) < nu_) v.push_back(base_->zero());
  return RingElement(shared_from_this(), std::move(v));
}

void require_same_ring(const RingElement& a, const RingElement& b, const char* where) {
  if (!a.valid() || !b.valid()) fail(errc::internal_error, "uninitialized element");
  if (a.ring().get() == b.ring().get()) return;
  if (!a.ring()->equals(*b.ring()))
    fail(errc::ring_mismatch, std::string(where) + ": " + a.ring()->description() + " vs " +
                                  b.ring()->description());
}

bool same_ring(const RingElement& a, const RingElement& b) {
  return a.valid() && b.valid() &&
         (a.ring().get() == b.ring().get() || a.ring()->equals(*b.ring()));
}

RingElement Ring::add(const RingElement& x, const RingElement& y) const {
  require_same_ring(x, y, "add");
  auto self = shared_from_this();
  switch (kind_) {
    case RingKind::prime_field:
    case RingKind::mod_prime_power:
      return RingElement(self, mod_reduce(as_residue(x.payload()) + as_residue(y.payload()), modulus_));
    case RingKind::rationals:
      return RingElement(self, Rational(as_rational(x.payload()) + as_rational(y.payload())));
    case RingKind::truncated: {
      const auto& a = as_coeffs(x.payload());
      const auto& b = as_coeffs(y.payload());
      RingElement::Coeffs v(static_cast<size_t>(nu_), base_->zero());
      for (int i = 0; i < nu_; ++i) v[i] = base_->add(a[i], b[i]);
      return RingElement(self, std::move(v));
    }
  }
  fail(errc::internal_error, "bad ring kind");
}

RingElement Ring::sub(const RingElement& x, const RingElement& y) const { return add(x, neg(y)); }

RingElement Ring::neg(const RingElement& x) const {
  auto self = shared_from_this();
  switch (kind_) {
    case RingKind::prime_field:
    case RingKind::mod_prime_power:
      return RingElement(self, mod_reduce(-as_residue(x.payload()), modulus_));
    case RingKind::rationals:
      return RingElement(self, Rational(-as_rational(x.payload())));
    case RingKind::truncated: {
      const auto& a = as_coeffs(x.payload());
      RingElement::Coeffs v(static_cast<size_t>(nu_), base_->zero());
      for (int i = 0; i < nu_; ++i) v[i] = base_->neg(a[i]);
      return RingElement(self, std::move(v));
    }
  }
  fail(errc::internal_error, "bad ring kind");
}

RingElement Ring::mul(const RingElement& x, const RingElement& y) const {
  require_same_ring(x, y, "mul");
  auto self = shared_from_this();
  switch (kind_) {
    case RingKind::prime_field:
    case RingKind::mod_prime_power:
      return RingElement(self, mod_reduce(as_residue(x.payload()) * as_residue(y.payload()), modulus_));
    case RingKind::rationals:
      return RingElement(self, Rational(as_rational(x.payload()) * as_rational(y.payload())));
    case RingKind::truncated: {
      const auto& a = as_coeffs(x.payload());
      const auto& b = as_coeffs(y.payload());
      RingElement::Coeffs v(static_cast<size_t>(nu_), base_->zero());
      for (int i = 0; i < nu_; ++i)
        for (int j = 0; i + j < nu_; ++j)
          v[i + j] = base_->add(v[i + j], base_->mul(a[i], b[j]));
      return RingElement(self, std::move(v));
    }
  }
  fail(errc::internal_error, "bad ring kind");
}

bool Ring::is_zero(const RingElement& x) const {
  switch (kind_) {
    case RingKind::prime_field:
    case RingKind::mod_prime_power:
      return as_residue(x.payload()) == 0;
    case RingKind::rationals:
      return as_rational(x.payload()) == 0;
    case RingKind::truncated: {
      const auto& a = as_coeffs(x.payload());
      return std::all_of(a.begin(), a.end(), [](const RingElement& c) { return c.is_zero(); });
    }
  }
  return false;
}

bool Ring::is_one(const RingElement& x) const { return is_zero(sub(x, one())); }

bool Ring::is_unit(const RingElement& x) const {
  switch (kind_) {
    case RingKind::prime_field:
      return as_residue(x.payload()) != 0;
    case RingKind::mod_prime_power:
      return as_residue(x.payload()) % p_ != 0;
    case RingKind::rationals:
      return as_rational(x.payload()) != 0;
    case RingKind::truncated:
      return as_coeffs(x.payload())[0].is_unit();
  }
  return false;
}

bool Ring::in_ideal_power(const RingElement& x, int j) const {
  if (j <= 0) return true;
  if (j >= nu_) return is_zero(x);
  switch (kind_) {
    case RingKind::prime_field:
    case RingKind::rationals:
      return is_zero(x);
    case RingKind::mod_prime_power: {
      std::int64_t q = 1;
      for (int i = 0; i < j; ++i) q *= p_;
      return as_residue(x.payload()) % q == 0;
    }
    case RingKind::truncated: {
      const auto& a = as_coeffs(x.payload());
      for (int i = 0; i < j; ++i)
        if (!a[i].is_zero()) return false;
      return true;
    }
  }
  return false;
}

RingElement Ring::invert_unit(const RingElement& x) const {
  if (!is_unit(x)) fail(errc::not_a_unit, to_string(x) + " in " + description_);
  auto self = shared_from_this();
  switch (kind_) {
    case RingKind::prime_field:
    case RingKind::mod_prime_power:
      return RingElement(self, mod_inverse(as_residue(x.payload()), modulus_));
    case RingKind::rationals:
      return RingElement(self, Rational(1 / as_rational(x.payload())));
    case RingKind::truncated: {
      // Triangular solve against the e-filtration: w_0 = a_0^{-1},
      // w_n = -a_0^{-1} sum_{j=1..n} a_j w_{n-j}.
      const auto& a = as_coeffs(x.payload());
      RingElement u = base_->invert_unit(a[0]);
      RingElement::Coeffs w(static_cast<size_t>(nu_), base_->zero());
      w[0] = u;
      for (int n = 1; n < nu_; ++n) {
        RingElement s = base_->zero();
        for (int j = 1; j <= n; ++j) s = base_->add(s, base_->mul(a[j], w[n - j]));
        w[n] = base_->neg(base_->mul(u, s));
      }
      return RingElement(self, std::move(w));
    }
  }
  fail(errc::internal_error, "bad ring kind");
}

std::optional<int> Ring::nilpotency_order(const RingElement& x) const {
  if (is_zero(x)) return 1;
  if (is_unit(x)) return std::nullopt;
  RingElement p = x;
  for (int n = 1; n <= nu_; ++n) {
    if (is_zero(p)) return n;
    p = mul(p, x);
  }
  // Non-units are nilpotent in every supported ring.
  fail(errc::internal_error, "non-unit with no nilpotency order");
}

RingElement Ring::div_by_integer(const RingElement& x, std::int64_t n) const {
  if (!q_algebra_) fail(errc::not_q_algebra, "division by integers needs a Q-algebra, ring is " + description_);
  if (n == 0) fail(errc::not_a_unit, "division by zero integer");
  if (kind_ == RingKind::rationals)
    return RingElement(shared_from_this(), Rational(as_rational(x.payload()) / Rational(static_cast<long>(n))));
  const auto& a = as_coeffs(x.payload());
  RingElement::Coeffs v(static_cast<size_t>(nu_), base_->zero());
  for (int i = 0; i < nu_; ++i) v[i] = base_->div_by_integer(a[i], n);
  return RingElement(shared_from_this(), std::move(v));
}

RingElement Ring::pow(const RingElement& x, std::int64_t e) const {
  if (e < 0) return pow(invert_unit(x), -e);
  RingElement acc = one();
  RingElement b = x;
  std::int64_t k = e;
  while (k > 0) {
    if (k & 1) acc = mul(acc, b);
    k >>= 1;
    if (k > 0) b = mul(b, b);
  }
  return acc;
}

std::string Ring::to_string(const RingElement& x) const {
  switch (kind_) {
    case RingKind::prime_field:
    case RingKind::mod_prime_power:
      return std::to_string(as_residue(x.payload()));
    case RingKind::rationals: {
      return as_rational(x.payload()).get_str();
    }
    case RingKind::truncated: {
      const auto& a = as_coeffs(x.payload());
      std::ostringstream out;
      bool first = true;
      for (int i = 0; i < nu_; ++i) {
        if (a[i].is_zero()) continue;
        std::string c = a[i].str();
        bool negative = !c.empty() && c[0] == '-';
        if (negative) c = c.substr(1);
        std::string mono;
        if (i == 0) {
          mono = c;
        } else {
          std::string var = i == 1 ? "e" : "e^" + std::to_string(i);
          mono = (c == "1") ? var : c + "*" + var;
        }
        if (first) {
          out << (negative ? "-" : "") << mono;
          first = false;
        } else {
          out << (negative ? " - " : " + ") << mono;
        }
      }
      if (first) out << "0";
      return out.str();
    }
  }
  fail(errc::internal_error, "bad ring kind");
}

bool operator==(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b, "compare");
  return a.ring_->is_zero(a.ring_->sub(a, b));
}

bool has_hom(const Ring& source, const Ring& target) {
  if (source.equals(target)) return true;
  bool src_modular = source.kind() == RingKind::mod_prime_power || source.kind() == RingKind::prime_field;
  bool tgt_modular = target.kind() == RingKind::mod_prime_power || target.kind() == RingKind::prime_field;
  if (src_modular && tgt_modular)
    return source.prime() == target.prime() &&
           target.nilpotency_index() <= source.nilpotency_index();
  if (source.kind() == RingKind::truncated) {
    if (target.kind() == RingKind::truncated)
      return source.base()->equals(*target.base()) &&
             target.nilpotency_index() <= source.nilpotency_index();
    return source.base()->equals(target);  // nu' = 1 collapses to the base
  }
  return false;
}

RingElement apply_hom(const RingElement& x, const RingPtr& target) {
  const Ring& src = *x.ring();
  const Ring& tgt = *target;
  if (!has_hom(src, tgt))
    fail(errc::no_canonical_hom, src.description() + " -> " + tgt.description());
  if (src.equals(tgt)) return RingElement(target, x.payload());
  if (src.kind() == RingKind::mod_prime_power || src.kind() == RingKind::prime_field)
    return tgt.from_int(std::get<std::int64_t>(x.payload()));
  // Truncated source: drop the coefficients the target cannot see.
  const auto& a = std::get<RingElement::Coeffs>(x.payload());
  if (tgt.kind() != RingKind::truncated) return apply_hom(a[0], target);
  RingElement::Coeffs v;
  v.reserve(static_cast<size_t>(tgt.nilpotency_index()));
  for (int i = 0; i < tgt.nilpotency_index(); ++i) v.push_back(apply_hom(a[i], tgt.base()));
  return RingElement(target, std::move(v));
}

}  // namespace ccsym
