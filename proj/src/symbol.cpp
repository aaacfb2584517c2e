#include "ccsym/symbol.hpp"

#include <cassert>
#include <numeric>
#include <vector>

namespace ccsym {

NormContext::NormContext(LaurentSeries phi_) : phi(std::move(phi_)), n(0) {
  if (!phi.is_exact())
    fail(errc::truncation_too_coarse, "norm context needs a finite-support series");
  GammaClass cls = phi.classify_gamma();
  if (!cls.invertible) fail(errc::not_a_unit_series, "norm context series is not invertible");
  if (cls.w < 1)
    fail(errc::zero_winding_composition, "norm context needs positive winding number");
  n = cls.w;
}

long required_pos_bound(const LaurentSeries& f, const LaurentSeries& g) {
  WittDecomposition df = witt_decompose(f, 0);
  WittDecomposition dg = witt_decompose(g, 0);
  long K = 0;
  for (const auto& [j, b] : dg.neg) {
    auto ord = b.ring()->nilpotency_order(b);
    if (!ord) fail(errc::internal_error, "negative Witt parameter is not nilpotent");
    K = std::max(K, j * static_cast<long>(*ord));
  }
  for (const auto& [i, a] : df.neg) {
    auto ord = a.ring()->nilpotency_order(a);
    if (!ord) fail(errc::internal_error, "negative Witt parameter is not nilpotent");
    K = std::max(K, i * static_cast<long>(*ord));
  }
  return K;
}

namespace {

// One orientation of the double product: pairs positive parameters of one
// side with negative parameters of the other.
RingElement half_product(const RingPtr& ring, const std::map<long, RingElement>& pos,
                         const std::map<long, RingElement>& neg) {
  RingElement acc = ring->one();
  for (const auto& [i, a] : pos) {
    for (const auto& [j, b] : neg) {
      long d = std::gcd(i, j);
      RingElement factor = ring->one() - a.pow(j / d) * b.pow(i / d);
      acc = acc * factor.pow(d);
    }
  }
  return acc;
}

}  // namespace

SymbolValue commutator_pairing(const LaurentSeries& f, const LaurentSeries& g) {
  const RingPtr& ring = f.ring();
  long K = required_pos_bound(f, g);
  WittDecomposition df = witt_decompose(f, K);
  WittDecomposition dg = witt_decompose(g, K);
  RingElement num = df.a0.pow(dg.w) * half_product(ring, df.pos, dg.neg);
  RingElement den = dg.a0.pow(df.w) * half_product(ring, dg.pos, df.neg);
  return SymbolValue{num * den.inverse()};
}

SymbolValue cc_symbol(const LaurentSeries& f, const LaurentSeries& g) {
  long wf = f.winding_number();
  long wg = g.winding_number();
  SymbolValue c = commutator_pairing(f, g);
  bool odd = (wf % 2 != 0) && (wg % 2 != 0);
  return odd ? SymbolValue{-c.value} : c;
}

SymbolValue tame_symbol(const LaurentSeries& f, const LaurentSeries& g) {
  const RingPtr& ring = f.ring();
  if (!ring->is_field()) fail(errc::not_a_field, "tame symbol needs a field, ring is " + ring->description());
  long wf = f.winding_number();
  long wg = g.winding_number();
  RingElement lcf = f.coeff(wf);
  RingElement lcg = g.coeff(wg);
  RingElement v = lcf.pow(wg) * lcg.pow(-wf);
  bool odd = (wf % 2 != 0) && (wg % 2 != 0);
  return SymbolValue{odd ? -v : v};
}

SymbolValue residue_symbol(const LaurentSeries& f, const LaurentSeries& g) {
  const RingPtr& ring = f.ring();
  if (!ring->is_q_algebra())
    fail(errc::not_q_algebra, "residue formula needs a Q-algebra, ring is " + ring->description());
  if (!f.is_exact())
    fail(errc::truncation_too_coarse, "residue formula needs an exact first argument");
  LaurentSeries h = f - LaurentSeries::one(ring);
  for (const auto& [e, c] : h.coeffs())
    if (!c.in_maximal_ideal())
      fail(errc::not_one_plus_nilpotent,
           "first argument must lie in 1 + m((t)): coefficient at t^" + std::to_string(e));
  GammaClass gc = g.classify_gamma();
  if (!gc.invertible) fail(errc::not_a_unit_series, "second argument is not invertible");

  LaurentSeries lf = log_one_plus(h);
  if (lf.is_known_zero()) return SymbolValue{ring->one()};
  long prec = 4 + std::max<long>(0, -lf.min_exponent().value_or(0)) +
              std::max<long>(0, -g.min_exponent().value_or(0));
  for (int attempt = 0; attempt < 6; ++attempt, prec *= 2) {
    LaurentSeries dlog = g.derivative() * g.inverse(prec);
    LaurentSeries prod = lf * dlog;
    if (!prod.knows(-1)) continue;
    RingElement r = prod.residue();
    assert(r.in_maximal_ideal());
    LaurentSeries e = exp_series(LaurentSeries::constant(ring, r));
    return SymbolValue{e.coeff(0)};
  }
  fail(errc::internal_error, "residue precision did not stabilize");
}

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// phi-power cache for both signs of the exponent.
class PhiPowers {
 public:
  PhiPowers(const LaurentSeries& phi, long psi_prec)
      : phi_(phi), psi_prec_(psi_prec), pos_{LaurentSeries::one(phi.ring())} {}

  const LaurentSeries& get(long q) {
    if (q >= 0) {
      while (static_cast<long>(pos_.size()) <= q) pos_.push_back(pos_.back() * phi_);
      return pos_[static_cast<size_t>(q)];
    }
    if (neg_.empty()) neg_.push_back(phi_.inverse_upto(psi_prec_));
    while (static_cast<long>(neg_.size()) < -q) neg_.push_back(neg_.back() * neg_[0]);
    return neg_[static_cast<size_t>(-q - 1)];
  }

 private:
  LaurentSeries phi_;
  long psi_prec_;
  std::vector<LaurentSeries> pos_;
  std::vector<LaurentSeries> neg_;
};

// Expand s in base phi: s = sum_{b < n} gamma_b(phi) t^b.  Works down the
// m-adic filtration: each round clears the residual modulo the next ideal
// power, because phi's sub-leading terms all carry maximal-ideal factors.
std::vector<LaurentSeries> phi_digits(const LaurentSeries& s, const LaurentSeries& phi, long n,
                                      const RingElement& c, long e_cap, PhiPowers& pows) {
  const RingPtr& ring = s.ring();
  int nu = ring->nilpotency_index();
  std::vector<LaurentSeries::CoeffMap> digit_maps(static_cast<size_t>(n));
  LaurentSeries r = s;
  for (int round = 0; round < nu; ++round) {
    long scanned_from = r.min_exponent().value_or(0) - 1;
    int guard = 0;
    for (;;) {
      if (++guard > 100000) fail(errc::internal_error, "digit expansion did not terminate");
      long limit = e_cap;
      if (auto b = r.truncation_bound()) limit = std::min(limit, *b);
      long e = 0;
      const RingElement* re = nullptr;
      for (const auto& [exp, coeff] : r.coeffs()) {
        if (exp <= scanned_from) continue;
        if (exp > limit) break;
        if (!ring->in_ideal_power(coeff, round + 1)) {
          e = exp;
          re = &coeff;
          break;
        }
      }
      if (!re) break;
      long q = floor_div(e, n);
      long b = e - q * n;
      RingElement delta = *re * c.pow(-q);
      auto it = digit_maps[static_cast<size_t>(b)].find(q);
      if (it == digit_maps[static_cast<size_t>(b)].end())
        digit_maps[static_cast<size_t>(b)].emplace(q, delta);
      else
        it->second = it->second + delta;
      r = r - pows.get(q).scalar_mul(delta).shift(b);
      scanned_from = e;  // everything at or below e is now in the next ideal power
    }
  }
  long limit_final = e_cap;
  if (auto b = r.truncation_bound()) limit_final = std::min(limit_final, *b);
  for (const auto& [exp, coeff] : r.coeffs())
    if (exp <= limit_final)
      fail(errc::internal_error, "digit expansion left a nonzero residual");
  std::vector<LaurentSeries> digits;
  digits.reserve(static_cast<size_t>(n));
  for (long b = 0; b < n; ++b) {
    long qb = floor_div(limit_final - b, n);
    digits.emplace_back(ring, std::move(digit_maps[static_cast<size_t>(b)]), qb);
  }
  return digits;
}

LaurentSeries determinant(const std::vector<std::vector<LaurentSeries>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  const RingPtr& ring = m[0][0].ring();
  LaurentSeries acc = LaurentSeries::zero(ring);
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<LaurentSeries>> minor;
    minor.reserve(n - 1);
    for (size_t i = 1; i < n; ++i) {
      std::vector<LaurentSeries> row;
      row.reserve(n - 1);
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    LaurentSeries term = m[0][j] * determinant(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

LaurentSeries norm_map(const NormContext& ctx, const LaurentSeries& f, long prec) {
  const RingPtr& ring = f.ring();
  GammaClass cls = f.classify_gamma();
  if (!cls.invertible) fail(errc::not_a_unit_series, "norm argument is not invertible");
  long n = ctx.n;
  RingElement c = ctx.phi.coeff(n);
  long depth = std::max<long>(0, -f.min_exponent().value_or(0));
  long margin = 4 + depth + static_cast<long>(ring->nilpotency_index());
  for (int attempt = 0; attempt < 6; ++attempt, margin *= 2) {
    try {
      long e_cap = n * (prec + margin);
      long psi_prec = e_cap + n * margin;
      PhiPowers pows(ctx.phi, psi_prec);
      std::vector<std::vector<LaurentSeries>> m(
          static_cast<size_t>(n), std::vector<LaurentSeries>(static_cast<size_t>(n), LaurentSeries::zero(ring)));
      for (long a = 0; a < n; ++a) {
        std::vector<LaurentSeries> col = phi_digits(f.shift(a), ctx.phi, n, c, e_cap, pows);
        for (long b = 0; b < n; ++b) m[static_cast<size_t>(b)][static_cast<size_t>(a)] = col[static_cast<size_t>(b)];
      }
      LaurentSeries det = determinant(m);
      if (det.knows(prec)) return det.truncate_to(prec);
    } catch (const Error& e) {
      if (e.code() != errc::truncation_too_coarse) throw;
    }
  }
  fail(errc::internal_error, "norm precision did not stabilize");
}

bool verify_adjunction(const LaurentSeries& f, const LaurentSeries& g, const NormContext& ctx) {
  long prec = 16;
  for (int attempt = 0; attempt < 8; ++attempt, prec *= 2) {
    try {
      SymbolValue lhs = cc_symbol(f, compose(g, ctx.phi, prec));
      SymbolValue rhs = cc_symbol(norm_map(ctx, f, prec), g);
      return lhs == rhs;
    } catch (const Error& e) {
      if (e.code() != errc::truncation_too_coarse) throw;
    }
  }
  fail(errc::internal_error, "adjunction comparison did not stabilize");
}

}  // namespace ccsym
