#include "ccsym/expr.hpp"

#include <cctype>
#include <cstdint>

namespace ccsym {

namespace {

[[noreturn]] void parse_fail(const std::string& input, size_t pos, const std::string& what) {
  fail(errc::parse_error, what + " at position " + std::to_string(pos) + " in \"" + input + "\"");
}

class Scanner {
 public:
  explicit Scanner(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const char* what) {
    if (!consume(c)) parse_fail(s_, pos_, std::string("expected ") + what);
  }
  std::int64_t digits() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      parse_fail(s_, pos_, "expected a number");
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > 1000000000000000000LL / 10) parse_fail(s_, pos_, "number too large");
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return v;
  }
  std::int64_t signed_digits() {
    bool neg = consume('-');
    std::int64_t v = digits();
    return neg ? -v : v;
  }
  size_t pos() const { return pos_; }
  const std::string& input() const { return s_; }

 private:
  const std::string& s_;
  size_t pos_ = 0;
};

struct Primary {
  LaurentSeries value;
  bool bare_t;  // negative exponents are accepted only here
};

class SeriesParser {
 public:
  SeriesParser(const std::string& s, RingPtr ring) : sc_(s), ring_(std::move(ring)) {}

  LaurentSeries run() {
    LaurentSeries v = expr();
    if (!sc_.done()) parse_fail(sc_.input(), sc_.pos(), "trailing input");
    return v;
  }

 private:
  LaurentSeries expr() {
    LaurentSeries v = term();
    for (;;) {
      if (sc_.consume('+'))
        v = v + term();
      else if (sc_.consume('-'))
        v = v - term();
      else
        return v;
    }
  }

  LaurentSeries term() {
    LaurentSeries v = factor();
    while (sc_.consume('*')) v = v * factor();
    return v;
  }

  LaurentSeries factor() {
    if (sc_.consume('-')) return -factor();
    Primary p = primary();
    if (sc_.consume('^')) {
      size_t at = sc_.pos();
      std::int64_t k = sc_.signed_digits();
      if (k < 0) {
        if (!p.bare_t) parse_fail(sc_.input(), at, "negative exponents only apply to t");
        return LaurentSeries::monomial(ring_, ring_->one(), k);
      }
      return pow_series(p.value, k, 0);
    }
    return p.value;
  }

  Primary primary() {
    char c = sc_.peek();
    if (c == '(') {
      sc_.expect('(', "(");
      LaurentSeries v = expr();
      sc_.expect(')', ")");
      return {v, false};
    }
    if (c == 't') {
      sc_.consume('t');
      return {LaurentSeries::t(ring_), true};
    }
    if (c == 'e') {
      sc_.consume('e');
      return {LaurentSeries::constant(ring_, ring_->epsilon()), false};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t num = sc_.digits();
      if (sc_.consume('/')) {
        size_t at = sc_.pos();
        std::int64_t den = sc_.digits();
        if (den == 0) parse_fail(sc_.input(), at, "zero denominator");
        return {LaurentSeries::constant(ring_, ring_->from_fraction(num, den)), false};
      }
      return {LaurentSeries::constant(ring_, ring_->from_int(num)), false};
    }
    parse_fail(sc_.input(), sc_.pos(), "expected a number, e, t or (");
  }

  Scanner sc_;
  RingPtr ring_;
};

// n = p^k for the smallest prime divisor p, or nothing.
std::pair<std::int64_t, int> prime_power(std::int64_t n) {
  if (n < 2) return {0, 0};
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {n, 1};
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return n == 1 ? std::make_pair(p, k) : std::make_pair<std::int64_t, int>(0, 0);
}

}  // namespace

RingPtr parse_ring_spec(const std::string& s) {
  Scanner sc(s);
  RingPtr base;
  char c = sc.peek();
  if (c == 'Q') {
    sc.consume('Q');
    base = Ring::rationals();
  } else if (c == 'F') {
    sc.consume('F');
    base = Ring::prime_field(sc.digits());
  } else if (c == 'Z') {
    sc.consume('Z');
    sc.expect('/', "/ after Z");
    std::int64_t n = sc.digits();
    auto [p, k] = prime_power(n);
    if (p == 0)
      fail(errc::unsupported_ring, std::to_string(n) + " is not a prime power");
    RingPtr r = Ring::mod_prime_power(p, k);
    if (!sc.done()) parse_fail(s, sc.pos(), "trailing input");
    return r;
  } else {
    parse_fail(s, sc.pos(), "expected F<p>, Z/<p^k>, Q, or a truncated algebra");
  }
  if (sc.done()) return base;
  sc.expect('[', "[e]/e^<v>");
  sc.expect('e', "[e]/e^<v>");
  sc.expect(']', "[e]/e^<v>");
  sc.expect('/', "[e]/e^<v>");
  sc.expect('e', "[e]/e^<v>");
  sc.expect('^', "[e]/e^<v>");
  std::int64_t nu = sc.digits();
  if (!sc.done()) parse_fail(s, sc.pos(), "trailing input");
  return Ring::truncated(base, static_cast<int>(nu));
}

LaurentSeries parse_series(const std::string& s, const RingPtr& ring) {
  return SeriesParser(s, ring).run();
}

}  // namespace ccsym
