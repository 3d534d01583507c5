#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "derivlab/ring.hpp"

// Exact dense elimination over Q and Z/p. Every routine here throws
// CompositeModulusUnsupported when handed Z/m with m composite.
namespace derivlab::linalg {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;

/// Reduced row-echelon form. Pivots are chosen as the first nonzero entry in
/// fixed column order, so the result only depends on the row space.
struct Echelon {
  Matrix rows;
  std::vector<std::size_t> pivots;
  std::size_t cols = 0;
  RingSpec ring;

  std::size_t rank() const noexcept { return rows.size(); }
};

Echelon row_reduce(const Matrix& m, std::size_t cols, const RingSpec& ring);

std::size_t rank(const Matrix& m, std::size_t cols, const RingSpec& ring);

/// Basis of {x : m x = 0}, returned in reduced row-echelon form.
Matrix nullspace(const Matrix& m, std::size_t cols, const RingSpec& ring);

/// Residual of v after clearing every pivot column of `e`.
Vector reduce(const Echelon& e, Vector v);

bool in_row_space(const Echelon& e, const Vector& v);

/// Some x with a x = b, if one exists.
std::optional<Vector> solve(const Matrix& a, const Vector& b, std::size_t cols, const RingSpec& ring);

Vector zero_vector(std::size_t n, const RingSpec& ring);

}  // namespace derivlab::linalg
