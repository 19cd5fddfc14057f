#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ghc/exact/qvector.hpp"

namespace ghc::exact {

/// Dense row-major matrix over Q; each row is a QVector of equal length.
using QMatrix = std::vector<QVector>;

/// Rank of the row span.
std::size_t rank(std::span<const QVector> rows);

/// Basis of {x : rows * x = 0}; `cols` fixes the width when rows is empty.
std::vector<QVector> nullspace(std::span<const QVector> rows, std::size_t cols);

/// Some x with a * x = b, or nullopt if the system is inconsistent.
std::optional<QVector> solve(std::span<const QVector> a, const QVector &b, std::size_t cols);

/// span(sub) ⊆ span(super).
bool span_contains(std::span<const QVector> super, std::span<const QVector> sub);

/// Inverse of a square matrix; throws ghc::InputError when singular.
QMatrix inverse(std::span<const QVector> a);

QVector mat_vec(std::span<const QVector> a, const QVector &x);

} // namespace ghc::exact
