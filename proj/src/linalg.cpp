#include "derivlab/linalg.hpp"

#include <cstdint>
#include <utility>

#include "derivlab/errors.hpp"

namespace derivlab::linalg {

namespace {

struct RationalOps {
  using value_type = mpq_class;

  static value_type from(const Scalar& s) { return s.rational_value(); }
  static Scalar to(const value_type& v) { return Scalar::rational(v); }
  static bool is_zero(const value_type& v) { return sgn(v) == 0; }
  static value_type inverse(const value_type& v) { return 1 / v; }
  static void scale(value_type& x, const value_type& f) { x *= f; }
  // x -= f * y
  void sub_mul(value_type& x, const value_type& f, const value_type& y) {
    tmp_ = f * y;
    x -= tmp_;
  }

  value_type tmp_;
};

struct ModOps {
  using value_type = std::int64_t;

  explicit ModOps(RingSpec r) : ring(r), p(r.modulus()) {}

  static value_type from(const Scalar& s) { return s.residue_value(); }
  Scalar to(value_type v) const { return Scalar::from_int(ring, v); }
  static bool is_zero(value_type v) { return v == 0; }
  value_type inverse(value_type v) const { return inv_unit(Scalar::from_int(ring, v)).residue_value(); }
  void scale(value_type& x, value_type f) const {
    x = static_cast<value_type>((static_cast<__int128>(x) * f) % p);
  }
  void sub_mul(value_type& x, value_type f, value_type y) const {
    __int128 v = (static_cast<__int128>(x) - static_cast<__int128>(f) * y) % p;
    if (v < 0) v += p;
    x = static_cast<value_type>(v);
  }

  RingSpec ring;
  std::int64_t p;
};

void require_field(const RingSpec& ring) {
  if (!ring.is_field()) throw CompositeModulusUnsupported("elimination over " + ring.name());
}

template <class Ops>
using Dense = std::vector<std::vector<typename Ops::value_type>>;

template <class Ops>
Dense<Ops> to_dense(const Matrix& m, std::size_t cols, const Ops&) {
  Dense<Ops> out;
  out.reserve(m.size());
  for (const auto& row : m) {
    if (row.size() != cols) throw Error("row length does not match column count");
    auto& dst = out.emplace_back();
    dst.reserve(cols);
    for (const auto& s : row) dst.push_back(Ops::from(s));
  }
  return out;
}

// In-place Gauss-Jordan. Rows keep their relative order except for the pivot
// swaps; zero rows are dropped at the end.
template <class Ops>
std::vector<std::size_t> gauss_jordan(Dense<Ops>& rows, std::size_t cols, Ops& ops) {
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> support;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && Ops::is_zero(rows[p][c])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    auto& pivot = rows[r];
    const auto inv = ops.inverse(pivot[c]);
    support.clear();
    for (std::size_t k = c; k < cols; ++k) {
      if (!Ops::is_zero(pivot[k])) {
        ops.scale(pivot[k], inv);
        support.push_back(k);
      }
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || Ops::is_zero(rows[i][c])) continue;
      const auto factor = rows[i][c];
      auto& row = rows[i];
      for (std::size_t k : support) ops.sub_mul(row[k], factor, pivot[k]);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

template <class Ops>
Echelon reduce_with(const Matrix& m, std::size_t cols, const RingSpec& ring, Ops ops) {
  auto dense = to_dense(m, cols, ops);
  Echelon e;
  e.cols = cols;
  e.ring = ring;
  e.pivots = gauss_jordan(dense, cols, ops);
  e.rows.reserve(dense.size());
  for (const auto& row : dense) {
    auto& dst = e.rows.emplace_back();
    dst.reserve(cols);
    for (const auto& v : row) dst.push_back(ops.to(v));
  }
  return e;
}

}  // namespace

Vector zero_vector(std::size_t n, const RingSpec& ring) { return Vector(n, Scalar::zero(ring)); }

Echelon row_reduce(const Matrix& m, std::size_t cols, const RingSpec& ring) {
  require_field(ring);
  if (ring.is_rationals()) return reduce_with(m, cols, ring, RationalOps{});
  return reduce_with(m, cols, ring, ModOps{ring});
}

std::size_t rank(const Matrix& m, std::size_t cols, const RingSpec& ring) {
  return row_reduce(m, cols, ring).rank();
}

Matrix nullspace(const Matrix& m, std::size_t cols, const RingSpec& ring) {
  const Echelon e = row_reduce(m, cols, ring);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;

  // One vector per free column. Their leading entries can sit in pivot
  // columns, so the set is reduced once more to reach canonical form.
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(cols, ring);
    v[free] = Scalar::one(ring);
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  return row_reduce(basis, cols, ring).rows;
}

Vector reduce(const Echelon& e, Vector v) {
  if (v.size() != e.cols) throw Error("vector length does not match echelon form");
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    const Scalar factor = v[e.pivots[r]];
    if (factor.is_zero()) continue;
    const auto& row = e.rows[r];
    for (std::size_t k = e.pivots[r]; k < e.cols; ++k) {
      if (!row[k].is_zero()) v[k] -= factor * row[k];
    }
  }
  return v;
}

bool in_row_space(const Echelon& e, const Vector& v) {
  for (const auto& s : reduce(e, v)) {
    if (!s.is_zero()) return false;
  }
  return true;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b, std::size_t cols, const RingSpec& ring) {
  if (a.size() != b.size()) throw Error("right-hand side length does not match row count");
  Matrix augmented = a;
  for (std::size_t i = 0; i < augmented.size(); ++i) augmented[i].push_back(b[i]);
  const Echelon e = row_reduce(augmented, cols + 1, ring);
  Vector x = zero_vector(cols, ring);
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] == cols) return std::nullopt;
    x[e.pivots[r]] = e.rows[r][cols];
  }
  return x;
}

}  // namespace derivlab::linalg
