#include "ccsym/witt.hpp"

#include <cassert>

namespace ccsym {

bool WittDecomposition::operator==(const WittDecomposition& other) const {
  return w == other.w && a0 == other.a0 && pos_bound == other.pos_bound && neg == other.neg &&
         pos == other.pos;
}

namespace {

int rounds_for(int nu) {
  // Each corrective round squares the ideal whose powers bound the residual.
  int r = 1, power = 1;
  while (power < nu) {
    power *= 2;
    ++r;
  }
  return r + 1;
}

std::pair<LaurentSeries, LaurentSeries> split_once(const LaurentSeries& f, long work_prec) {
  const RingPtr& ring = f.ring();
  int nu = ring->nilpotency_index();
  LaurentSeries g_acc = LaurentSeries::one(ring);
  LaurentSeries h_acc = LaurentSeries::one(ring);
  LaurentSeries r = f;
  int max_rounds = rounds_for(nu);
  for (int round = 0; round < max_rounds; ++round) {
    if (r.looks_like_one()) break;
    LaurentSeries r_plus = r.nonneg_part();
    LaurentSeries r_minus = r.negative_part();
    g_acc = g_acc * r_plus;
    if (r_minus.is_known_zero()) {
      r = LaurentSeries::one(ring);
      break;
    }
    r = r_plus.inverse_upto(work_prec) * r;  // now 1 + (something with ideal-power coefficients)
    LaurentSeries q = r - LaurentSeries::one(ring);
    LaurentSeries q_plus = q.nonneg_part();
    LaurentSeries q_minus = q.negative_part();
    LaurentSeries one_plus_qp = LaurentSeries::one(ring) + q_plus;
    LaurentSeries one_plus_qm = LaurentSeries::one(ring) + q_minus;
    g_acc = g_acc * one_plus_qp;
    h_acc = h_acc * one_plus_qm;
    // (1 + q_minus)^{-1} is a terminating geometric series.
    LaurentSeries geo = LaurentSeries::one(ring);
    LaurentSeries p = LaurentSeries::one(ring);
    for (int i = 1; i <= nu; ++i) {
      p = p * (-q_minus);
      if (p.is_known_zero()) break;
      geo = geo + p;
    }
    r = geo * (one_plus_qp.inverse_upto(work_prec) * r);
  }
  // Fold the residual into the plus part.  After the round bound it is 1,
  // with no negative support, so the accumulated factor stays in Gamma_plus;
  // multiplying also caps the claimed window by what the residual certifies.
  if (!(r.is_exact() && r.looks_like_one())) g_acc = g_acc * r;
  return {g_acc, h_acc};
}

}  // namespace

std::pair<LaurentSeries, LaurentSeries> split_gamma0(const LaurentSeries& f, long prec) {
  GammaClass cls = f.classify_gamma();
  if (!cls.invertible || !cls.in_gamma0)
    fail(errc::not_in_gamma0, "split requires winding number zero: " + f.str());
  if (!f.knows(prec))
    fail(errc::truncation_too_coarse, "split input not known through requested precision");
  int nu = f.ring()->nilpotency_index();
  long depth = 0;
  if (auto lo = f.min_exponent(); lo && *lo < 0) depth = -*lo;
  long margin = static_cast<long>(nu) * depth + 2;
  std::optional<long> cap = f.truncation_bound();
  std::optional<long> prev_w;
  for (int attempt = 0; attempt < 8; ++attempt, margin *= 2) {
    long W = prec + margin;
    if (cap) W = std::min(W, *cap);
    if (prev_w && W == *prev_w)
      fail(errc::truncation_too_coarse,
           "split input too coarse to certify the plus part through " + std::to_string(prec));
    prev_w = W;
    std::pair<LaurentSeries, LaurentSeries> parts{LaurentSeries::zero(f.ring()),
                                                  LaurentSeries::zero(f.ring())};
    try {
      parts = split_once(f, W);
    } catch (const Error& e) {
      if (e.code() != errc::truncation_too_coarse) throw;
      continue;  // window eroded mid-round; retry with more headroom
    }
    auto& [g, h] = parts;
    if (!g.knows(prec)) continue;
#ifndef NDEBUG
    // Stability: recomputing with extra headroom must not change the window.
    if (!cap || W + 5 <= *cap) {
      auto [g2, h2] = split_once(f, W + 5);
      long lo = g.min_exponent().value_or(0);
      assert(g2.agrees_on(g, lo, prec));
      assert(h2.equals_exact(h));
    }
#endif
    GammaClass hc = h.classify_gamma();
    if (!hc.in_gamma_minus) fail(errc::internal_error, "split minus part left Gamma_minus");
    return {g.is_exact() ? g : g.truncate_to(prec), h};
  }
  fail(errc::internal_error, "split precision did not stabilize");
}

std::vector<RingElement> pos_witt_params(const LaurentSeries& g, long K) {
  GammaClass cls = g.classify_gamma();
  if (!cls.invertible || !cls.in_gamma_plus)
    fail(errc::not_in_gamma_plus, "positive parameters require a power-series unit: " + g.str());
  if (!g.knows(K))
    fail(errc::truncation_too_coarse, "positive parameters to " + std::to_string(K) +
                                          " need the series through that degree");
  const RingPtr& ring = g.ring();
  std::vector<RingElement> params;
  params.reserve(static_cast<size_t>(std::max<long>(K, 0)));
  LaurentSeries r = g.scalar_mul(g.coeff(0).inverse()).truncate_to(K);
  for (long i = 1; i <= K; ++i) {
    RingElement ai = -r.coeff(i);
    params.push_back(ai);
    if (ai.is_zero()) continue;
    // r <- r * (1 - a_i t^i)^{-1}; the inverse is the geometric series in
    // a_i t^i, generated directly through degree K.
    LaurentSeries::CoeffMap inv;
    RingElement p = ring->one();
    for (long e = 0; e <= K; e += i) {
      if (!p.is_zero()) inv.emplace(e, p);
      p = p * ai;
    }
    r = r * LaurentSeries(ring, std::move(inv), K);
  }
  return params;
}

std::map<long, RingElement> neg_witt_params(const LaurentSeries& h) {
  GammaClass cls = h.classify_gamma();
  if (!cls.invertible || !cls.in_gamma_minus)
    fail(errc::not_in_gamma_minus, "negative parameters require 1 + nilpotent principal part: " + h.str());
  const RingPtr& ring = h.ring();
  std::map<long, RingElement> params;
  LaurentSeries r = h;
  long initial_depth = -h.min_exponent().value_or(0);
  int nu = ring->nilpotency_index();
  long guard = initial_depth * static_cast<long>(nu) * nu + 64;
  for (long i = 1; !r.looks_like_one(); ++i) {
    if (i > guard)
      fail(errc::non_termination, "negative Witt parameter extraction exceeded its bound");
    RingElement ai = -r.coeff(-i);
    if (ai.is_zero()) continue;
    params.emplace(i, ai);
    // (1 - a t^{-i})^{-1} terminates because a is nilpotent.
    LaurentSeries::CoeffMap inv;
    RingElement p = ring->one();
    for (long e = 0; !p.is_zero(); e += i) {
      inv.emplace(-e, p);
      p = p * ai;
    }
    r = r * LaurentSeries(ring, std::move(inv));
  }
  return params;
}

WittDecomposition witt_decompose(const LaurentSeries& f, long K) {
  GammaClass cls = f.classify_gamma();
  if (!cls.invertible) fail(errc::not_a_unit_series, "cannot decompose: " + f.str());
  if (!f.knows(cls.w + K))
    fail(errc::truncation_too_coarse, "decomposition to bound " + std::to_string(K) +
                                          " needs the series through degree " +
                                          std::to_string(cls.w + K));
  LaurentSeries u = f.shift(-cls.w);
  auto [g, h] = split_gamma0(u, std::max<long>(K, 0));
  WittDecomposition d;
  d.w = cls.w;
  d.a0 = g.coeff(0);
  d.pos_bound = K;
  std::vector<RingElement> pos = pos_witt_params(g, K);
  for (long i = 1; i <= K; ++i)
    if (!pos[static_cast<size_t>(i - 1)].is_zero()) d.pos.emplace(i, pos[static_cast<size_t>(i - 1)]);
  d.neg = neg_witt_params(h);
  return d;
}

LaurentSeries witt_reconstruct(const WittDecomposition& d, long prec) {
  if (prec > d.pos_bound + d.w)
    fail(errc::truncation_too_coarse, "reconstruction beyond the stored positive bound");
  const RingPtr& ring = d.a0.ring();
  LaurentSeries acc = LaurentSeries::monomial(ring, d.a0, d.w);
  for (const auto& [i, ai] : d.pos) {
    LaurentSeries factor =
        LaurentSeries::one(ring) + LaurentSeries::monomial(ring, -ai, i);
    acc = acc * factor;
  }
  for (const auto& [i, ai] : d.neg) {
    LaurentSeries factor =
        LaurentSeries::one(ring) + LaurentSeries::monomial(ring, -ai, -i);
    acc = acc * factor;
  }
  return acc.truncate_to(prec);
}

}  // namespace ccsym
