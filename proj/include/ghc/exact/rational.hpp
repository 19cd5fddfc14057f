#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ghc::exact {

/// Exact rational number p/q with q > 0 and gcd(p, q) = 1.
///
/// Backed by 64-bit integers. Every operation widens to 128 bits, reduces,
/// and throws std::overflow_error if the reduced result does not fit. The
/// quantities this library handles (root coordinates, weight pairings,
/// simplex pivots on root-sized tableaux) stay far below that bound.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {} // NOLINT(implicit)
  Rational(std::int64_t n, std::int64_t d);

  [[nodiscard]] constexpr std::int64_t num() const { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const { return den_; }

  [[nodiscard]] constexpr bool is_zero() const { return num_ == 0; }
  [[nodiscard]] constexpr bool is_integer() const { return den_ == 1; }
  [[nodiscard]] constexpr int sign() const { return (num_ > 0) - (num_ < 0); }

  /// True iff the value lies in Z + 1/2.
  [[nodiscard]] constexpr bool is_half_odd() const { return den_ == 2; }

  [[nodiscard]] Rational abs() const { return num_ < 0 ? -*this : *this; }
  [[nodiscard]] Rational floor() const;

  Rational operator-() const;
  Rational &operator+=(const Rational &o);
  Rational &operator-=(const Rational &o);
  Rational &operator*=(const Rational &o);
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend constexpr bool operator==(const Rational &, const Rational &) = default;
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

  /// "p" when the denominator is 1, "p/q" otherwise.
  [[nodiscard]] std::string str() const;

  /// Accepts "p", "-p", "+p", "p/q" with optional surrounding whitespace.
  /// Throws ghc::InputError on anything else or a zero denominator.
  static Rational parse(std::string_view text);

private:
  static Rational from_wide(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream &operator<<(std::ostream &os, const Rational &q);

} // namespace ghc::exact
