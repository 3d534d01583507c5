#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "derivlab/algebra.hpp"

namespace derivlab {

/// Linear endomorphism of an algebra. Stored column-major: column j holds the
/// coordinates of the image of e_j.
class LinMap {
 public:
  LinMap(AlgebraPtr alg, std::vector<Scalar> column_major);

  static LinMap zero(const AlgebraPtr& alg);
  static LinMap identity(const AlgebraPtr& alg);
  static LinMap from_images(const AlgebraPtr& alg, const std::vector<AlgElement>& images);
  /// Builds the map from its values on the basis.
  static LinMap from_function(const AlgebraPtr& alg, const std::function<AlgElement(const AlgElement&)>& fn);

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  std::size_t dim() const noexcept { return alg_->dim(); }
  /// Coordinate `row` of the image of e_col.
  const Scalar& entry(std::size_t row, std::size_t col) const { return entries_[col * dim() + row]; }
  std::span<const Scalar> column_major() const noexcept { return entries_; }
  AlgElement image(std::size_t j) const;

  LinMap& operator+=(const LinMap& other);
  LinMap& operator-=(const LinMap& other);
  friend LinMap operator+(LinMap a, const LinMap& b) { return a += b; }
  friend LinMap operator-(LinMap a, const LinMap& b) { return a -= b; }
  friend LinMap operator*(const Scalar& s, LinMap a);
  friend LinMap operator*(long long s, const LinMap& a);
  friend bool operator==(const LinMap& a, const LinMap& b);

 private:
  AlgebraPtr alg_;
  std::vector<Scalar> entries_;
};

AlgElement apply(const LinMap& map, const AlgElement& a);
/// x -> outer(inner(x))
LinMap compose(const LinMap& outer, const LinMap& inner);

/// The unknowns of every identity: an ordered (f, g, h) over one algebra.
struct MapTriple {
  MapTriple(LinMap f_, LinMap g_, LinMap h_);

  static MapTriple zero(const AlgebraPtr& alg);

  const AlgebraPtr& algebra() const noexcept { return f.algebra(); }

  LinMap f;
  LinMap g;
  LinMap h;

  friend bool operator==(const MapTriple&, const MapTriple&) = default;
};

MapTriple operator+(const MapTriple& a, const MapTriple& b);
MapTriple operator*(const Scalar& s, const MapTriple& t);

/// a -> a alpha
LinMap right_mul_map(const AlgElement& alpha);
/// a -> alpha a
LinMap left_mul_map(const AlgElement& alpha);

/// alpha with T(a) = a alpha for all a, when one exists (field coefficients).
std::optional<AlgElement> recover_right_factor(const LinMap& map);

/// Closed-form Jordan left {g,h}-derivation family on T_n. `g_params` holds
/// g_kj for k <= j in row-major order (n(n+1)/2 values); `h_params` holds
/// h_1j for j = 1..n. The result has f = g + h.
MapTriple tn_jordan_family(const AlgebraPtr& tn, std::span<const Scalar> g_params, std::span<const Scalar> h_params);
MapTriple tn_jordan_family(std::size_t n, std::span<const Scalar> g_params, std::span<const Scalar> h_params);

/// Closed-form left {g,h}-derivation family on T_n: g(A) = a_11 sum_i g_1i e_1i,
/// h likewise, f = g + h. Each parameter list has n values.
MapTriple tn_left_family(const AlgebraPtr& tn, std::span<const Scalar> g_params, std::span<const Scalar> h_params);
MapTriple tn_left_family(std::size_t n, std::span<const Scalar> g_params, std::span<const Scalar> h_params);

/// (2 R_alpha, R_alpha, R_alpha) on M_n.
MapTriple mn_jordan_family(const AlgElement& alpha);
/// (2 R_alpha, R_alpha, R_alpha) on the quaternions.
MapTriple quat_jordan_family(const AlgElement& alpha);

/// Coefficient-wise lift sum a_t x^t -> sum F(a_t) x^t to truncated_poly(A, degree).
LinMap poly_lift(const LinMap& map, std::size_t degree);
/// Same, into an existing truncated polynomial algebra over map's algebra.
LinMap poly_lift(const LinMap& map, const AlgebraPtr& poly);
MapTriple poly_lift(const MapTriple& t, std::size_t degree);

/// F (x) id_S on A (x) S.
LinMap tensor_extend(const LinMap& map, const AlgebraPtr& s);
/// Same, into an existing A (x) S.
LinMap tensor_extend_into(const LinMap& map, const AlgebraPtr& product);
MapTriple tensor_extend(const MapTriple& t, const AlgebraPtr& s);

/// Coordinate maps f_t on A with F(a (x) 1) = sum_t f_t(a) (x) b_t, one per basis vector b_t of S.
std::vector<LinMap> tensor_coordinates(const LinMap& map);
/// The map a (x) s -> sum_t f_t(a) (x) b_t s.
LinMap tensor_reassemble(std::span<const LinMap> coordinates, const AlgebraPtr& product);

}  // namespace derivlab
