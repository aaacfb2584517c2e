#include "ccsym/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace ccsym {

namespace {

std::optional<long> min_opt(std::optional<long> a, std::optional<long> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

void require_same_ring(const LaurentSeries& f, const LaurentSeries& g, const char* where) {
  if (f.ring().get() == g.ring().get()) return;
  if (!f.ring()->equals(*g.ring()))
    fail(errc::ring_mismatch, std::string(where) + ": " + f.ring()->description() + " vs " +
                                  g.ring()->description());
}

}  // namespace

LaurentSeries::LaurentSeries(RingPtr ring, CoeffMap coeffs, std::optional<long> truncated_above)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)), trunc_(truncated_above) {
  normalize();
}

void LaurentSeries::normalize() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second.is_zero() || (trunc_ && it->first > *trunc_))
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

LaurentSeries LaurentSeries::constant(const RingPtr& ring, const RingElement& c) {
  CoeffMap m;
  if (!c.is_zero()) m.emplace(0, c);
  return LaurentSeries(ring, std::move(m));
}

LaurentSeries LaurentSeries::monomial(const RingPtr& ring, const RingElement& c, long exponent) {
  CoeffMap m;
  if (!c.is_zero()) m.emplace(exponent, c);
  return LaurentSeries(ring, std::move(m));
}

std::optional<long> LaurentSeries::reach() const {
  if (!coeffs_.empty()) return coeffs_.begin()->first;
  if (is_exact()) return std::nullopt;
  return *trunc_ + 1;
}

std::optional<long> LaurentSeries::min_exponent() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.begin()->first;
}

std::optional<long> LaurentSeries::max_stored_exponent() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.rbegin()->first;
}

RingElement LaurentSeries::coeff(long e) const {
  if (!knows(e))
    fail(errc::truncation_too_coarse,
         "coefficient at t^" + std::to_string(e) + " lies beyond the known window (bound " +
             std::to_string(*trunc_) + ")");
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? ring_->zero() : it->second;
}

LaurentSeries LaurentSeries::with_coeff(long e, const RingElement& c) const {
  LaurentSeries r = *this;
  r.coeffs_.erase(e);
  if (!c.is_zero()) r.coeffs_.emplace(e, c);
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::truncate_to(long D) const {
  LaurentSeries r = *this;
  r.trunc_ = trunc_ ? std::min(*trunc_, D) : D;
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::shift(long k) const {
  CoeffMap m;
  for (const auto& [e, c] : coeffs_) m.emplace(e + k, c);
  return LaurentSeries(ring_, std::move(m), trunc_ ? std::optional<long>(*trunc_ + k) : std::nullopt);
}

LaurentSeries LaurentSeries::scalar_mul(const RingElement& c) const {
  if (c.is_zero()) return zero(ring_);
  CoeffMap m;
  for (const auto& [e, a] : coeffs_) m.emplace(e, a * c);
  return LaurentSeries(ring_, std::move(m), trunc_);
}

LaurentSeries LaurentSeries::nonneg_part() const {
  CoeffMap m;
  for (const auto& [e, c] : coeffs_)
    if (e >= 0) m.emplace(e, c);
  return LaurentSeries(ring_, std::move(m), trunc_);
}

LaurentSeries LaurentSeries::negative_part() const {
  if (trunc_ && *trunc_ < -1)
    fail(errc::truncation_too_coarse, "negative part not fully known");
  CoeffMap m;
  for (const auto& [e, c] : coeffs_)
    if (e < 0) m.emplace(e, c);
  return LaurentSeries(ring_, std::move(m));
}

LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) {
  require_same_ring(f, g, "add");
  std::optional<long> B = min_opt(f.trunc_, g.trunc_);
  LaurentSeries::CoeffMap m = f.coeffs_;
  for (const auto& [e, c] : g.coeffs_) {
    auto it = m.find(e);
    if (it == m.end())
      m.emplace(e, c);
    else
      it->second = it->second + c;
  }
  return LaurentSeries(f.ring_, std::move(m), B);
}

LaurentSeries operator-(const LaurentSeries& f) { return f.scalar_mul(-f.ring()->one()); }

LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) { return f + (-g); }

LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) {
  require_same_ring(f, g, "mul");
  if (f.is_known_zero() || g.is_known_zero()) return LaurentSeries::zero(f.ring_);
  std::optional<long> B;
  if (f.trunc_) B = min_opt(B, *f.trunc_ + *g.reach());
  if (g.trunc_) B = min_opt(B, *g.trunc_ + *f.reach());
  LaurentSeries::CoeffMap m;
  for (const auto& [ef, cf] : f.coeffs_) {
    for (const auto& [eg, cg] : g.coeffs_) {
      long e = ef + eg;
      if (B && e > *B) continue;
      RingElement prod = cf * cg;
      if (prod.is_zero()) continue;
      auto it = m.find(e);
      if (it == m.end())
        m.emplace(e, prod);
      else
        it->second = it->second + prod;
    }
  }
  return LaurentSeries(f.ring_, std::move(m), B);
}

bool LaurentSeries::equals_exact(const LaurentSeries& other) const {
  require_same_ring(*this, other, "equals");
  if (!is_exact() || !other.is_exact())
    fail(errc::truncation_too_coarse, "whole-series equality needs exact operands");
  if (coeffs_.size() != other.coeffs_.size()) return false;
  auto it = other.coeffs_.begin();
  for (const auto& [e, c] : coeffs_) {
    if (it->first != e || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

bool LaurentSeries::agrees_on(const LaurentSeries& other, long lo, long hi) const {
  require_same_ring(*this, other, "agrees_on");
  if (!knows(hi) || !other.knows(hi))
    fail(errc::truncation_too_coarse, "comparison window [" + std::to_string(lo) + ", " +
                                          std::to_string(hi) + "] exceeds a known window");
  for (long e = lo; e <= hi; ++e)
    if (!(coeff(e) == other.coeff(e))) return false;
  return true;
}

bool LaurentSeries::looks_like_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second.is_one();
}

GammaClass LaurentSeries::classify_gamma() const {
  GammaClass g;
  for (const auto& [e, c] : coeffs_) {
    if (!c.in_maximal_ideal()) {
      g.invertible = true;
      g.w = e;
      break;
    }
  }
  if (!g.invertible) {
    if (!is_exact())
      fail(errc::truncation_too_coarse,
           "no unit coefficient within the known window; cannot classify");
    return g;
  }
  g.in_gamma0 = g.w == 0;
  bool knows_negatives = !trunc_ || *trunc_ >= -1;
  g.in_gamma_plus =
      g.in_gamma0 && knows_negatives && (coeffs_.empty() || coeffs_.begin()->first >= 0);
  g.in_gamma_minus = g.in_gamma0 && is_exact() && coeff(0).is_one() &&
                     coeffs_.rbegin()->first <= 0;
  return g;
}

long LaurentSeries::winding_number() const {
  GammaClass g = classify_gamma();
  if (!g.invertible) fail(errc::not_a_unit_series, "series is not invertible: " + str());
  return g.w;
}

LaurentSeries LaurentSeries::inverse_upto(long prec) const {
  GammaClass cls = classify_gamma();
  if (!cls.invertible) fail(errc::not_a_unit_series, "cannot invert: " + str());
  long w = cls.w;
  LaurentSeries u = shift(-w);
  LaurentSeries u_minus = u.negative_part();
  LaurentSeries u_plus = u.nonneg_part();
  RingElement c = u.coeff(0);
  RingElement cinv = c.inverse();

  // Monomial-times-Gamma_minus inputs invert exactly: the geometric series
  // in the nilpotent principal part terminates.
  if (u_plus.is_exact() && u_plus.coeffs().size() == 1) {
    LaurentSeries r = u_minus.scalar_mul(cinv);
    LaurentSeries acc = one(ring_);
    LaurentSeries p = one(ring_);
    int guard = ring_->nilpotency_index() + 1;
    for (int i = 1; i <= guard; ++i) {
      p = p * (-r);
      if (p.is_known_zero()) break;
      acc = acc + p;
    }
    return acc.scalar_mul(cinv).shift(-w);
  }

  int nu = ring_->nilpotency_index();
  long W = prec - w;
  long avail = u_plus.truncation_bound() ? std::min(W, *u_plus.truncation_bound()) : W;
  // Triangular power-series inversion of the nonnegative part.
  std::map<long, RingElement> inv_map;
  std::vector<RingElement> v(static_cast<size_t>(std::max<long>(avail, 0)) + 1, ring_->zero());
  v[0] = cinv;
  long maxdeg = u_plus.max_stored_exponent().value_or(0);
  for (long n = 1; n <= avail; ++n) {
    RingElement s = ring_->zero();
    for (long j = 1; j <= std::min(n, maxdeg); ++j) {
      RingElement uj = u_plus.coeff(j);
      if (!uj.is_zero()) s = s + uj * v[static_cast<size_t>(n - j)];
    }
    v[static_cast<size_t>(n)] = -(cinv * s);
  }
  for (long n = 0; n <= avail; ++n)
    if (!v[static_cast<size_t>(n)].is_zero()) inv_map.emplace(n, v[static_cast<size_t>(n)]);
  LaurentSeries pinv(ring_, std::move(inv_map), avail);

  LaurentSeries res = pinv;
  if (!u_minus.is_known_zero()) {
    LaurentSeries r = pinv * u_minus;
    LaurentSeries geo = one(ring_);
    LaurentSeries p = one(ring_);
    for (int i = 1; i <= nu - 1; ++i) {
      p = p * (-r);
      geo = geo + p;
    }
    res = geo * pinv;
  }
  return res.shift(-w);
}

LaurentSeries LaurentSeries::inverse(long prec) const {
  long w = winding_number();
  if (prec < w)
    fail(errc::truncation_too_coarse, "inverse precision below winding number");
  int nu = ring_->nilpotency_index();
  long depth = 0;
  if (auto lo = min_exponent(); lo && *lo < w) depth = w - *lo;
  long margin = static_cast<long>(nu) * (depth + 1) + 2;
  std::optional<long> last_bound;
  for (int attempt = 0; attempt < 6; ++attempt, margin *= 2) {
    LaurentSeries res = LaurentSeries::zero(ring_);
    try {
      res = inverse_upto(prec + margin);
    } catch (const Error& e) {
      if (e.code() != errc::truncation_too_coarse) throw;
      continue;
    }
    if (res.is_exact() || res.knows(prec)) return res.is_exact() ? res : res.truncate_to(prec);
    long bound = *res.truncation_bound();
    if (last_bound && bound <= *last_bound)
      fail(errc::truncation_too_coarse,
           "input window cannot certify the inverse through " + std::to_string(prec));
    last_bound = bound;
  }
  fail(errc::internal_error, "inverse precision did not stabilize");
}

LaurentSeries LaurentSeries::derivative() const {
  CoeffMap m;
  for (const auto& [e, c] : coeffs_) {
    RingElement d = ring_->from_int(e) * c;
    if (!d.is_zero()) m.emplace(e - 1, d);
  }
  return LaurentSeries(ring_, std::move(m), trunc_ ? std::optional<long>(*trunc_ - 1) : std::nullopt);
}

RingElement LaurentSeries::residue() const { return coeff(-1); }

LaurentSeries LaurentSeries::map_ring(const RingPtr& target) const {
  CoeffMap m;
  for (const auto& [e, c] : coeffs_) m.emplace(e, apply_hom(c, target));
  return LaurentSeries(target, std::move(m), trunc_);
}

std::string LaurentSeries::str() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    std::string cs = c.str();
    bool composite = cs.find(' ') != std::string::npos;
    bool negative = !composite && !cs.empty() && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    std::string body;
    if (e == 0) {
      body = composite ? cs : cs;  // constant terms splice into the sum unparenthesized
    } else {
      std::string var = e == 1 ? "t" : "t^" + std::to_string(e);
      if (composite)
        body = "(" + cs + ")*" + var;
      else if (cs == "1")
        body = var;
      else
        body = cs + "*" + var;
    }
    if (first) {
      out << (negative ? "-" : "") << body;
      first = false;
    } else {
      out << (negative ? " - " : " + ") << body;
    }
  }
  if (first) out << "0";
  if (trunc_) out << " + O(t^" << (*trunc_ + 1) << ")";
  return out.str();
}

LaurentSeries compose(const LaurentSeries& g, const LaurentSeries& phi, long prec) {
  require_same_ring(g, phi, "compose");
  const RingPtr& ring = g.ring();
  GammaClass cls = phi.classify_gamma();
  if (!cls.invertible) fail(errc::not_a_unit_series, "composition target is not invertible");
  long n = cls.w;
  if (n == 0) fail(errc::zero_winding_composition, "composition needs nonzero winding number");
  if (!g.is_exact() && n < 0)
    fail(errc::truncation_too_coarse, "unknown tail cannot be composed with negative winding");
  if (g.is_known_zero()) return LaurentSeries::zero(ring);

  int nu = ring->nilpotency_index();
  long d_low = 0;
  if (auto lo = phi.reach(); lo) d_low = std::max<long>(0, n - *lo);
  long maxpos = std::max<long>(0, g.max_stored_exponent().value_or(0));
  long maxneg = std::max<long>(0, -(g.min_exponent().value_or(0)));

  long margin = (std::labs(n) + d_low + 1) * (maxneg + 2) + nu * (d_low + 1) + 4;
  for (int attempt = 0; attempt < 6; ++attempt, margin *= 2) {
    try {
      LaurentSeries result = LaurentSeries::constant(ring, g.knows(0) ? g.coeff(0) : ring->zero());
      // Ascending positive powers.
      LaurentSeries p = LaurentSeries::one(ring);
      for (long i = 1; i <= maxpos; ++i) {
        p = p * phi;
        RingElement gi = g.knows(i) ? g.coeff(i) : ring->zero();
        if (!gi.is_zero()) result = result + p.scalar_mul(gi);
      }
      if (maxneg > 0) {
        LaurentSeries psi = phi.inverse_upto(prec + margin);
        LaurentSeries q = LaurentSeries::one(ring);
        for (long i = 1; i <= maxneg; ++i) {
          q = q * psi;
          RingElement gi = g.coeff(-i);
          if (!gi.is_zero()) result = result + q.scalar_mul(gi);
        }
      }
      if (!g.is_exact()) {
        // Unknown g-coefficients above D contribute only at exponents
        // >= (D+1)n - (nu-1)*d_low when n > 0.
        long B = (*g.truncation_bound() + 1) * n - static_cast<long>(nu - 1) * d_low - 1;
        result = result.truncate_to(B);
      }
      if (result.is_exact()) return result;
      if (result.knows(prec)) return result.truncate_to(prec);
    } catch (const Error& e) {
      if (e.code() != errc::truncation_too_coarse) throw;
    }
  }
  fail(errc::internal_error, "composition precision did not stabilize");
}

LaurentSeries pow_series(const LaurentSeries& f, long n, long prec) {
  const RingPtr& ring = f.ring();
  if (n == 0) return LaurentSeries::one(ring);
  if (n > 0) {
    LaurentSeries acc = f;
    for (long i = 1; i < n; ++i) acc = acc * f;
    return acc;
  }
  long margin = 4;
  for (int attempt = 0; attempt < 6; ++attempt, margin *= 4) {
    try {
      LaurentSeries inv = f.inverse_upto(prec + margin);
      LaurentSeries acc = inv;
      for (long i = 1; i < -n; ++i) acc = acc * inv;
      if (acc.is_exact()) return acc;
      if (acc.knows(prec)) return acc.truncate_to(prec);
    } catch (const Error& e) {
      if (e.code() != errc::truncation_too_coarse) throw;
    }
  }
  fail(errc::internal_error, "power precision did not stabilize");
}

namespace {

void require_nilpotent_coeffs(const LaurentSeries& h, const char* what) {
  if (!h.ring()->is_q_algebra())
    fail(errc::not_q_algebra, std::string(what) + " needs a Q-algebra");
  if (!h.is_exact())
    fail(errc::truncation_too_coarse, std::string(what) + " needs an exact argument");
  for (const auto& [e, c] : h.coeffs())
    if (!c.in_maximal_ideal())
      fail(errc::coefficient_not_nilpotent,
           std::string(what) + ": coefficient at t^" + std::to_string(e) + " is a unit");
}

}  // namespace

LaurentSeries log_one_plus(const LaurentSeries& h) {
  require_nilpotent_coeffs(h, "log(1+h)");
  const RingPtr& ring = h.ring();
  LaurentSeries acc = LaurentSeries::zero(ring);
  LaurentSeries p = LaurentSeries::one(ring);
  int nu = ring->nilpotency_index();
  for (int k = 1; k <= nu - 1; ++k) {
    p = p * h;
    if (p.is_known_zero()) break;
    RingElement coeff = ring->div_by_integer(ring->from_int(k % 2 == 1 ? 1 : -1), k);
    acc = acc + p.scalar_mul(coeff);
  }
  return acc;
}

LaurentSeries exp_series(const LaurentSeries& x) {
  require_nilpotent_coeffs(x, "exp");
  const RingPtr& ring = x.ring();
  LaurentSeries acc = LaurentSeries::one(ring);
  LaurentSeries p = LaurentSeries::one(ring);
  int nu = ring->nilpotency_index();
  for (int k = 1; k <= nu - 1; ++k) {
    p = p * x;
    p = p.scalar_mul(ring->div_by_integer(ring->one(), k));
    if (p.is_known_zero()) break;
    acc = acc + p;
  }
  return acc;
}

}  // namespace ccsym
