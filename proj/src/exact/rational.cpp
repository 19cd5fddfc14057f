#include "ghc/exact/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "ghc/error.hpp"

namespace ghc::exact {

namespace {

using wide = __int128;

wide wide_gcd(wide a, wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InputError("not a rational number: \"" + std::string(whole) + "\"");
  }
  return v;
}

} // namespace

Rational Rational::from_wide(wide n, wide d) {
  if (d == 0) throw std::domain_error("rational division by zero");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  if (!fits(n) || !fits(d)) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d);
  return r;
}

Rational::Rational(std::int64_t n, std::int64_t d) { *this = from_wide(n, d); }

Rational Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return Rational(q);
}

Rational Rational::operator-() const { return from_wide(-static_cast<wide>(num_), den_); }

Rational &Rational::operator+=(const Rational &o) {
  if (den_ == 1 && o.den_ == 1) return *this = from_wide(static_cast<wide>(num_) + o.num_, 1);
  *this = from_wide(static_cast<wide>(num_) * o.den_ + static_cast<wide>(o.num_) * den_,
                    static_cast<wide>(den_) * o.den_);
  return *this;
}

Rational &Rational::operator-=(const Rational &o) { return *this += -o; }

Rational &Rational::operator*=(const Rational &o) {
  *this = from_wide(static_cast<wide>(num_) * o.num_, static_cast<wide>(den_) * o.den_);
  return *this;
}

Rational &Rational::operator/=(const Rational &o) {
  *this = from_wide(static_cast<wide>(num_) * o.den_, static_cast<wide>(den_) * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
  wide lhs = static_cast<wide>(a.num_) * b.den_;
  wide rhs = static_cast<wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, text));
  std::int64_t n = parse_int(s.substr(0, slash), text);
  std::string_view ds = s.substr(slash + 1);
  if (!ds.empty() && (ds.front() == '-' || ds.front() == '+')) {
    throw InputError("not a rational number: \"" + std::string(text) + "\"");
  }
  std::int64_t d = parse_int(ds, text);
  if (d == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  return Rational(n, d);
}

std::ostream &operator<<(std::ostream &os, const Rational &q) { return os << q.str(); }

} // namespace ghc::exact
