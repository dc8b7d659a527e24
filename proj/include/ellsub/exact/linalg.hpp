#pragma once

#include "ellsub/exact/rational.hpp"

#include <optional>
#include <vector>

namespace ellsub {

using Matrix = std::vector<std::vector<Rational>>;
using Vector = std::vector<Rational>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix &m);

/// Basis of {x : m x = 0}, one vector per free column, with that free entry
/// set to 1.
std::vector<Vector> nullspace(Matrix m, std::size_t ncols);

/// The unique solution of m x = b, or nullopt when the system is
/// inconsistent or underdetermined.
std::optional<Vector> solve_unique(const Matrix &m, const Vector &b,
                                   std::size_t ncols);

} // namespace ellsub
