#pragma once

#include <map>
#include <vector>

#include "ccsym/laurent.hpp"

namespace ccsym {

/// The unique presentation f = t^w * a0 * prod(1 - a_i t^i) * prod(1 - a_{-i} t^{-i}).
/// Negative parameters are finitely many nilpotents, stored sparsely; positive
/// parameters are known through pos_bound only.
struct WittDecomposition {
  long w = 0;
  RingElement a0;
  std::map<long, RingElement> neg;  // i >= 1 -> a_{-i}, nonzero entries only
  std::map<long, RingElement> pos;  // 1 <= i <= pos_bound, nonzero entries only
  long pos_bound = 0;

  bool operator==(const WittDecomposition& other) const;
};

/// Factor f in Gamma_0 as gPlus * hMinus with gPlus a power-series unit and
/// hMinus = 1 + nilpotent polynomial in t^{-1}.  gPlus is provably correct
/// through exponent prec; hMinus is exact.
std::pair<LaurentSeries, LaurentSeries> split_gamma0(const LaurentSeries& f, long prec);

/// The unique a_1..a_K with g/g(0) = prod_{i<=K} (1 - a_i t^i) mod t^{K+1}.
std::vector<RingElement> pos_witt_params(const LaurentSeries& g, long K);

/// Exact finite factorization h = prod (1 - a_{-i} t^{-i}) for h in Gamma_minus.
std::map<long, RingElement> neg_witt_params(const LaurentSeries& h);

WittDecomposition witt_decompose(const LaurentSeries& f, long K);

/// The product series, truncated at prec (prec <= w + pos_bound).
LaurentSeries witt_reconstruct(const WittDecomposition& d, long prec);

}  // namespace ccsym
