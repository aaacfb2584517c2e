#pragma once

#include <string>

#include "ccsym/laurent.hpp"

namespace ccsym {

/// Ring spec grammar: F<p> | Z/<p^k> | Q | Q[e]/e^<v> | F<p>[e]/e^<v>.
RingPtr parse_ring_spec(const std::string& s);

/// Laurent-polynomial expressions: integers, rationals p/q, e, t, ^ with
/// integer exponents (negative ones only on t), + - * and parentheses.
/// Results are always exact.
LaurentSeries parse_series(const std::string& s, const RingPtr& ring);

}  // namespace ccsym
