#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ghc/exact/rational.hpp"

namespace ghc::exact {

/// Fixed-length vector of exact rationals (an element of h* or t*).
class QVector {
public:
  QVector() = default;
  explicit QVector(std::size_t dim) : coords_(dim) {}
  QVector(std::initializer_list<Rational> xs) : coords_(xs) {}
  explicit QVector(std::vector<Rational> xs) : coords_(std::move(xs)) {}

  [[nodiscard]] std::size_t dim() const { return coords_.size(); }
  [[nodiscard]] bool is_zero() const;

  Rational &operator[](std::size_t i) { return coords_[i]; }
  const Rational &operator[](std::size_t i) const { return coords_[i]; }

  [[nodiscard]] std::span<const Rational> coords() const { return coords_; }
  auto begin() { return coords_.begin(); }
  auto end() { return coords_.end(); }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  QVector &operator+=(const QVector &o);
  QVector &operator-=(const QVector &o);
  QVector &operator*=(const Rational &s);
  QVector operator-() const;

  friend QVector operator+(QVector a, const QVector &b) { return a += b; }
  friend QVector operator-(QVector a, const QVector &b) { return a -= b; }
  friend QVector operator*(QVector a, const Rational &s) { return a *= s; }
  friend QVector operator*(const Rational &s, QVector a) { return a *= s; }

  friend bool operator==(const QVector &, const QVector &) = default;
  /// Lexicographic; vectors of different length order by length first.
  friend std::strong_ordering operator<=>(const QVector &a, const QVector &b);

  /// Standard dot product.
  [[nodiscard]] Rational dot(const QVector &o) const;

  /// Coordinates as strings ("p" or "p/q").
  [[nodiscard]] std::vector<std::string> strs() const;

  /// Comma-separated rationals, e.g. "3/2,1/2".
  static QVector parse_list(const std::string &text);

private:
  std::vector<Rational> coords_;
};

std::ostream &operator<<(std::ostream &os, const QVector &v);

/// Throws ghc::InputError unless all vectors have dimension `dim`.
void require_dim(std::span<const QVector> vs, std::size_t dim, const char *what);

} // namespace ghc::exact
