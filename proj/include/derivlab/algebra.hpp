#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "derivlab/ring.hpp"

namespace derivlab {

class StructureAlgebra;
using AlgebraPtr = std::shared_ptr<const StructureAlgebra>;

/// Which constructor produced an algebra. Lets lifts and closed-form families
/// check what they were handed, and gives the CLI a name to print.
enum class AlgebraFamily { Custom, FullMatrix, UpperTriangular, Quaternions, RingAsAlgebra, Diagonal, Tensor, TruncatedPoly };

struct AlgebraOrigin {
  AlgebraFamily family = AlgebraFamily::Custom;
  /// Matrix size n for M_n / T_n, number of factors for Diagonal.
  std::size_t order = 0;
  /// Truncation degree D for TruncatedPoly.
  std::size_t degree = 0;
  std::string variable;
  /// Tensor factors (first, second), or the base algebra of a TruncatedPoly in `first`.
  AlgebraPtr first;
  AlgebraPtr second;
};

/// Finite-dimensional algebra over a RingSpec given by structure constants
/// c_{ij}^k with e_i e_j = sum_k c_{ij}^k e_k. Immutable once built.
///
/// The constructor checks shapes and ring membership only; associativity and
/// the unity axioms are checked by validate() so that broken tables can be
/// inspected.
class StructureAlgebra {
 public:
  struct Term {
    std::size_t index;
    Scalar coeff;
  };

  StructureAlgebra(RingSpec ring, std::vector<std::string> labels, std::vector<Scalar> constants,
                   std::vector<Scalar> unity, AlgebraOrigin origin = {});

  std::size_t dim() const noexcept { return labels_.size(); }
  const RingSpec& ring() const noexcept { return ring_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Scalar>& unity() const noexcept { return unity_; }
  const AlgebraOrigin& origin() const noexcept { return origin_; }

  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim() + j) * dim() + k];
  }
  /// Nonzero coordinates of e_i e_j.
  const std::vector<Term>& product_terms(std::size_t i, std::size_t j) const { return sparse_[i * dim() + j]; }

  /// Index of the basis vector with this label, if any.
  std::optional<std::size_t> index_of(std::string_view label) const;

  /// Same ring, labels, constants and unity.
  bool same_table(const StructureAlgebra& other) const;

 private:
  RingSpec ring_;
  std::vector<std::string> labels_;
  std::vector<Scalar> constants_;
  std::vector<Scalar> unity_;
  std::vector<std::vector<Term>> sparse_;
  AlgebraOrigin origin_;
};

/// Pointer identity, falling back to a table comparison.
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

class AlgElement {
 public:
  AlgElement(AlgebraPtr alg, std::vector<Scalar> coords);

  static AlgElement zero(const AlgebraPtr& alg);
  static AlgElement basis(const AlgebraPtr& alg, std::size_t i);
  static AlgElement unity(const AlgebraPtr& alg);
  /// Integer combination of labelled basis vectors, e.g. {{"e11", 1}, {"e12", 2}}.
  static AlgElement of(const AlgebraPtr& alg, std::initializer_list<std::pair<std::string_view, long long>> terms);

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  const std::vector<Scalar>& coords() const noexcept { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  std::size_t size() const noexcept { return coords_.size(); }
  bool is_zero() const;

  /// Human-readable form such as "3e12" or "1 - 2i + k".
  std::string to_string() const;

  AlgElement& operator+=(const AlgElement& other);
  AlgElement& operator-=(const AlgElement& other);
  AlgElement operator-() const;
  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  friend AlgElement operator*(const Scalar& s, const AlgElement& a);
  friend AlgElement operator*(long long s, const AlgElement& a);

  /// Coordinates equal over the same algebra.
  friend bool operator==(const AlgElement& a, const AlgElement& b);

 private:
  AlgebraPtr alg_;
  std::vector<Scalar> coords_;
};

/// Bilinear extension of the structure constants.
AlgElement multiply(const AlgElement& a, const AlgElement& b);
/// a b + b a
AlgElement jordan_product(const AlgElement& a, const AlgElement& b);

struct ValidationReport {
  enum class Failure { None, Associativity, LeftUnity, RightUnity };

  bool ok = true;
  Failure failure = Failure::None;
  /// First failing basis triple (i,j,k) for associativity; (i,0,0) for unity.
  std::array<std::size_t, 3> indices{0, 0, 0};

  explicit operator bool() const noexcept { return ok; }
};

/// Associativity on all basis triples in lexicographic order, then unity on each basis vector.
ValidationReport validate(const StructureAlgebra& alg);

/// M_n: basis e_ij in row-major order, e_ij e_kl = delta_jk e_il.
AlgebraPtr full_matrix(std::size_t n, const RingSpec& ring = {});
/// T_n: the e_ij with i <= j, row-major.
AlgebraPtr upper_triangular(std::size_t n, const RingSpec& ring = {});
/// Basis (1, i, j, k), i^2 = j^2 = k^2 = ijk = -1, over the rationals.
AlgebraPtr quaternions();
/// The coefficient ring as a one-dimensional algebra over itself.
AlgebraPtr ring_as_algebra(const RingSpec& ring = {});
/// The product ring C^n with orthogonal idempotents u1..un.
AlgebraPtr diagonal(std::size_t n, const RingSpec& ring = {});
/// A (x) B over a common field; basis e_i (x) f_j ordered by i then j.
AlgebraPtr tensor_product(const AlgebraPtr& a, const AlgebraPtr& b);
/// A[x]/(x^{D+1}); basis e_i x^t ordered by t then i.
AlgebraPtr truncated_poly(const AlgebraPtr& a, std::size_t degree, std::string variable = "x");

/// Basis index of e_ij (1-based i, j) in M_n or T_n.
std::size_t matrix_unit(const StructureAlgebra& alg, std::size_t i, std::size_t j);

bool is_commutative(const StructureAlgebra& alg);

/// Basis of the center, computed as an exact nullspace. Needs a field.
std::vector<AlgElement> center_basis(const AlgebraPtr& alg);

/// x commutes with every basis vector.
bool is_central(const AlgElement& x);

}  // namespace derivlab
