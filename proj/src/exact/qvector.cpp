#include "ghc/exact/qvector.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "ghc/error.hpp"

namespace ghc::exact {

namespace {

void check_same(const QVector &a, const QVector &b) {
  if (a.dim() != b.dim()) {
    throw InputError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                     std::to_string(b.dim()));
  }
}

} // namespace

bool QVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational &q) { return q.is_zero(); });
}

QVector &QVector::operator+=(const QVector &o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

QVector &QVector::operator-=(const QVector &o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

QVector &QVector::operator*=(const Rational &s) {
  for (auto &c : coords_) c *= s;
  return *this;
}

QVector QVector::operator-() const {
  QVector r = *this;
  for (auto &c : r.coords_) c = -c;
  return r;
}

std::strong_ordering operator<=>(const QVector &a, const QVector &b) {
  if (a.dim() != b.dim()) return a.dim() <=> b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Rational QVector::dot(const QVector &o) const {
  check_same(*this, o);
  Rational s;
  for (std::size_t i = 0; i < coords_.size(); ++i) s += coords_[i] * o.coords_[i];
  return s;
}

std::vector<std::string> QVector::strs() const {
  std::vector<std::string> out;
  out.reserve(coords_.size());
  for (const auto &c : coords_) out.push_back(c.str());
  return out;
}

QVector QVector::parse_list(const std::string &text) {
  std::vector<Rational> xs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) xs.push_back(Rational::parse(item));
  if (xs.empty()) throw InputError("empty coordinate list");
  return QVector(std::move(xs));
}

std::ostream &operator<<(std::ostream &os, const QVector &v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

void require_dim(std::span<const QVector> vs, std::size_t dim, const char *what) {
  for (const auto &v : vs) {
    if (v.dim() != dim) {
      throw InputError(std::string(what) + ": expected dimension " + std::to_string(dim) +
                       ", got " + std::to_string(v.dim()));
    }
  }
}

} // namespace ghc::exact
