#include "derivlab/linmap.hpp"

#include "derivlab/errors.hpp"
#include "derivlab/linalg.hpp"

namespace derivlab {

namespace {

void require_same(const AlgebraPtr& a, const AlgebraPtr& b, const char* op) {
  if (!same_algebra(a, b)) throw AlgebraMismatch(op);
}

void require_family(const StructureAlgebra& alg, AlgebraFamily family, const char* what) {
  if (alg.origin().family != family) throw Error(std::string(what));
}

// Entries indexed [row][col] while building, flattened column-major at the end.
struct MapBuilder {
  explicit MapBuilder(const AlgebraPtr& a) : alg(a), d(a->dim()), entries(d * d, Scalar::zero(a->ring())) {}

  Scalar& at(std::size_t row, std::size_t col) { return entries[col * d + row]; }
  LinMap build() { return LinMap(alg, std::move(entries)); }

  AlgebraPtr alg;
  std::size_t d;
  std::vector<Scalar> entries;
};

std::size_t tn_order(const StructureAlgebra& tn) {
  require_family(tn, AlgebraFamily::UpperTriangular, "closed-form T_n family needs an upper triangular algebra");
  return tn.origin().order;
}

}  // namespace

LinMap::LinMap(AlgebraPtr alg, std::vector<Scalar> column_major) : alg_(std::move(alg)), entries_(std::move(column_major)) {
  if (!alg_) throw Error("map without an algebra");
  if (entries_.size() != alg_->dim() * alg_->dim()) throw Error("map matrix must be dim x dim");
  for (const auto& s : entries_) {
    if (!(s.ring() == alg_->ring())) throw RingMismatch("map entry " + s.to_string() + " not in " + alg_->ring().name());
  }
}

LinMap LinMap::zero(const AlgebraPtr& alg) {
  return LinMap(alg, std::vector<Scalar>(alg->dim() * alg->dim(), Scalar::zero(alg->ring())));
}

LinMap LinMap::identity(const AlgebraPtr& alg) {
  MapBuilder b(alg);
  for (std::size_t i = 0; i < b.d; ++i) b.at(i, i) = Scalar::one(alg->ring());
  return b.build();
}

LinMap LinMap::from_images(const AlgebraPtr& alg, const std::vector<AlgElement>& images) {
  if (images.size() != alg->dim()) throw Error("need one image per basis vector");
  MapBuilder b(alg);
  for (std::size_t j = 0; j < b.d; ++j) {
    require_same(alg, images[j].algebra(), "basis image");
    for (std::size_t k = 0; k < b.d; ++k) b.at(k, j) = images[j][k];
  }
  return b.build();
}

LinMap LinMap::from_function(const AlgebraPtr& alg, const std::function<AlgElement(const AlgElement&)>& fn) {
  std::vector<AlgElement> images;
  images.reserve(alg->dim());
  for (std::size_t j = 0; j < alg->dim(); ++j) images.push_back(fn(AlgElement::basis(alg, j)));
  return from_images(alg, images);
}

AlgElement LinMap::image(std::size_t j) const {
  const auto first = entries_.begin() + static_cast<std::ptrdiff_t>(j * dim());
  return AlgElement(alg_, std::vector<Scalar>(first, first + static_cast<std::ptrdiff_t>(dim())));
}

LinMap& LinMap::operator+=(const LinMap& other) {
  require_same(alg_, other.alg_, "map sum");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

LinMap& LinMap::operator-=(const LinMap& other) {
  require_same(alg_, other.alg_, "map difference");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

LinMap operator*(const Scalar& s, LinMap a) {
  for (auto& e : a.entries_) e *= s;
  return a;
}

LinMap operator*(long long s, const LinMap& a) { return Scalar::from_int(a.algebra()->ring(), s) * a; }

bool operator==(const LinMap& a, const LinMap& b) { return same_algebra(a.alg_, b.alg_) && a.entries_ == b.entries_; }

AlgElement apply(const LinMap& map, const AlgElement& a) {
  require_same(map.algebra(), a.algebra(), "apply");
  const std::size_t d = map.dim();
  std::vector<Scalar> out(d, Scalar::zero(map.algebra()->ring()));
  for (std::size_t j = 0; j < d; ++j) {
    if (a[j].is_zero()) continue;
    for (std::size_t k = 0; k < d; ++k) {
      const Scalar& e = map.entry(k, j);
      if (!e.is_zero()) out[k] += e * a[j];
    }
  }
  return AlgElement(map.algebra(), std::move(out));
}

LinMap compose(const LinMap& outer, const LinMap& inner) {
  require_same(outer.algebra(), inner.algebra(), "compose");
  return LinMap::from_function(inner.algebra(), [&](const AlgElement& e) { return apply(outer, apply(inner, e)); });
}

MapTriple::MapTriple(LinMap f_, LinMap g_, LinMap h_) : f(std::move(f_)), g(std::move(g_)), h(std::move(h_)) {
  if (!same_algebra(f.algebra(), g.algebra()) || !same_algebra(f.algebra(), h.algebra())) {
    throw AlgebraMismatch("triple maps live on different algebras");
  }
}

MapTriple MapTriple::zero(const AlgebraPtr& alg) {
  return MapTriple(LinMap::zero(alg), LinMap::zero(alg), LinMap::zero(alg));
}

MapTriple operator+(const MapTriple& a, const MapTriple& b) { return MapTriple(a.f + b.f, a.g + b.g, a.h + b.h); }

MapTriple operator*(const Scalar& s, const MapTriple& t) { return MapTriple(s * t.f, s * t.g, s * t.h); }

LinMap right_mul_map(const AlgElement& alpha) {
  return LinMap::from_function(alpha.algebra(), [&](const AlgElement& e) { return multiply(e, alpha); });
}

LinMap left_mul_map(const AlgElement& alpha) {
  return LinMap::from_function(alpha.algebra(), [&](const AlgElement& e) { return multiply(alpha, e); });
}

std::optional<AlgElement> recover_right_factor(const LinMap& map) {
  const AlgebraPtr& alg = map.algebra();
  const std::size_t d = alg->dim();
  // Unknown alpha; equation (j, q): coordinate q of e_j alpha equals entry (q, j).
  linalg::Matrix a;
  linalg::Vector b;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t q = 0; q < d; ++q) {
      linalg::Vector row = linalg::zero_vector(d, alg->ring());
      for (std::size_t p = 0; p < d; ++p) row[p] = alg->constant(j, p, q);
      a.push_back(std::move(row));
      b.push_back(map.entry(q, j));
    }
  }
  auto x = linalg::solve(a, b, d, alg->ring());
  if (!x) return std::nullopt;
  return AlgElement(alg, std::move(*x));
}

MapTriple tn_jordan_family(const AlgebraPtr& tn, std::span<const Scalar> g_params, std::span<const Scalar> h_params) {
  const std::size_t n = tn_order(*tn);
  if (g_params.size() != n * (n + 1) / 2) {
    throw BadParameterCount("T_n Jordan family needs n(n+1)/2 g-parameters, got " + std::to_string(g_params.size()));
  }
  if (h_params.size() != n) {
    throw BadParameterCount("T_n Jordan family needs n h-parameters, got " + std::to_string(h_params.size()));
  }
  const RingSpec& ring = tn->ring();
  // g_kj sits at the basis index of e_kj.
  auto gp = [&](std::size_t k, std::size_t j) -> const Scalar& { return g_params[matrix_unit(*tn, k, j)]; };
  auto coeff = [&](const AlgElement& a, std::size_t i, std::size_t k) -> const Scalar& {
    return a[matrix_unit(*tn, i, k)];
  };

  // g(A) = sum_{i<=j} (sum_{k=i..j} a_ik g_kj) e_ij
  auto g_of = [&](const AlgElement& a) {
    AlgElement out = AlgElement::zero(tn);
    std::vector<Scalar> c = out.coords();
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) {
        Scalar s = Scalar::zero(ring);
        for (std::size_t k = i; k <= j; ++k) s += coeff(a, i, k) * gp(k, j);
        c[matrix_unit(*tn, i, j)] = s;
      }
    }
    return AlgElement(tn, std::move(c));
  };
  // h(A) = a_11 h_11 e_11 + sum_{j>=2} (a_11 h_1j + sum_{k=2..j} a_1k g_kj) e_1j
  //        + sum_{1<i<=j} (sum_{k=i..j} a_ik g_kj) e_ij
  auto h_of = [&](const AlgElement& a) {
    std::vector<Scalar> c(tn->dim(), Scalar::zero(ring));
    c[matrix_unit(*tn, 1, 1)] = coeff(a, 1, 1) * h_params[0];
    for (std::size_t j = 2; j <= n; ++j) {
      Scalar s = coeff(a, 1, 1) * h_params[j - 1];
      for (std::size_t k = 2; k <= j; ++k) s += coeff(a, 1, k) * gp(k, j);
      c[matrix_unit(*tn, 1, j)] = s;
    }
    for (std::size_t i = 2; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) {
        Scalar s = Scalar::zero(ring);
        for (std::size_t k = i; k <= j; ++k) s += coeff(a, i, k) * gp(k, j);
        c[matrix_unit(*tn, i, j)] = s;
      }
    }
    return AlgElement(tn, std::move(c));
  };
  LinMap g = LinMap::from_function(tn, g_of);
  LinMap h = LinMap::from_function(tn, h_of);
  LinMap f = g + h;
  return MapTriple(std::move(f), std::move(g), std::move(h));
}

MapTriple tn_jordan_family(std::size_t n, std::span<const Scalar> g_params, std::span<const Scalar> h_params) {
  if (g_params.empty()) throw BadParameterCount("no parameters");
  return tn_jordan_family(upper_triangular(n, g_params.front().ring()), g_params, h_params);
}

MapTriple tn_left_family(const AlgebraPtr& tn, std::span<const Scalar> g_params, std::span<const Scalar> h_params) {
  const std::size_t n = tn_order(*tn);
  if (g_params.size() != n || h_params.size() != n) {
    throw BadParameterCount("T_n left family needs n g- and n h-parameters");
  }
  const std::size_t e11 = matrix_unit(*tn, 1, 1);
  MapBuilder g(tn), h(tn);
  // Only a_11 contributes: the maps vanish on every basis vector except e_11.
  for (std::size_t i = 1; i <= n; ++i) {
    g.at(matrix_unit(*tn, 1, i), e11) = g_params[i - 1];
    h.at(matrix_unit(*tn, 1, i), e11) = h_params[i - 1];
  }
  LinMap gm = g.build();
  LinMap hm = h.build();
  LinMap f = gm + hm;
  return MapTriple(std::move(f), std::move(gm), std::move(hm));
}

MapTriple tn_left_family(std::size_t n, std::span<const Scalar> g_params, std::span<const Scalar> h_params) {
  if (g_params.empty()) throw BadParameterCount("no parameters");
  return tn_left_family(upper_triangular(n, g_params.front().ring()), g_params, h_params);
}

MapTriple mn_jordan_family(const AlgElement& alpha) {
  require_family(*alpha.algebra(), AlgebraFamily::FullMatrix, "M_n family needs a full matrix algebra");
  LinMap g = right_mul_map(alpha);
  return MapTriple(2 * g, g, g);
}

MapTriple quat_jordan_family(const AlgElement& alpha) {
  require_family(*alpha.algebra(), AlgebraFamily::Quaternions, "quaternion family needs the quaternions");
  LinMap g = right_mul_map(alpha);
  return MapTriple(2 * g, g, g);
}

LinMap poly_lift(const LinMap& map, std::size_t degree) {
  return poly_lift(map, truncated_poly(map.algebra(), degree));
}

LinMap poly_lift(const LinMap& map, const AlgebraPtr& poly) {
  require_family(*poly, AlgebraFamily::TruncatedPoly, "poly_lift target is not a truncated polynomial algebra");
  require_same(poly->origin().first, map.algebra(), "poly_lift base");
  const std::size_t da = map.dim();
  MapBuilder b(poly);
  for (std::size_t t = 0; t <= poly->origin().degree; ++t) {
    for (std::size_t j = 0; j < da; ++j) {
      for (std::size_t k = 0; k < da; ++k) b.at(t * da + k, t * da + j) = map.entry(k, j);
    }
  }
  return b.build();
}

MapTriple poly_lift(const MapTriple& t, std::size_t degree) {
  const AlgebraPtr poly = truncated_poly(t.algebra(), degree);
  return MapTriple(poly_lift(t.f, poly), poly_lift(t.g, poly), poly_lift(t.h, poly));
}

LinMap tensor_extend(const LinMap& map, const AlgebraPtr& s) {
  return tensor_extend_into(map, tensor_product(map.algebra(), s));
}

LinMap tensor_extend_into(const LinMap& map, const AlgebraPtr& product) {
  if (product->origin().family != AlgebraFamily::Tensor) throw NotATensorAlgebra("tensor_extend target");
  if (!(map.algebra()->ring() == product->ring())) throw RingMismatch("tensor_extend");
  require_same(product->origin().first, map.algebra(), "tensor_extend first factor");
  const std::size_t da = map.dim(), db = product->origin().second->dim();
  MapBuilder b(product);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < db; ++j) {
      for (std::size_t k = 0; k < da; ++k) b.at(k * db + j, i * db + j) = map.entry(k, i);
    }
  }
  return b.build();
}

MapTriple tensor_extend(const MapTriple& t, const AlgebraPtr& s) {
  const AlgebraPtr product = tensor_product(t.algebra(), s);
  return MapTriple(tensor_extend_into(t.f, product), tensor_extend_into(t.g, product),
                   tensor_extend_into(t.h, product));
}

std::vector<LinMap> tensor_coordinates(const LinMap& map) {
  const AlgebraPtr& product = map.algebra();
  if (product->origin().family != AlgebraFamily::Tensor) throw NotATensorAlgebra("tensor_coordinates domain");
  const AlgebraPtr& a = product->origin().first;
  const AlgebraPtr& s = product->origin().second;
  const std::size_t da = a->dim(), db = s->dim();
  std::vector<MapBuilder> coords;
  coords.reserve(db);
  for (std::size_t t = 0; t < db; ++t) coords.emplace_back(a);
  for (std::size_t i = 0; i < da; ++i) {
    // e_i (x) 1_S
    std::vector<Scalar> pure(product->dim(), Scalar::zero(product->ring()));
    for (std::size_t j = 0; j < db; ++j) pure[i * db + j] = s->unity()[j];
    const AlgElement image = apply(map, AlgElement(product, std::move(pure)));
    for (std::size_t p = 0; p < da; ++p) {
      for (std::size_t t = 0; t < db; ++t) coords[t].at(p, i) = image[p * db + t];
    }
  }
  std::vector<LinMap> out;
  out.reserve(db);
  for (auto& c : coords) out.push_back(c.build());
  return out;
}

LinMap tensor_reassemble(std::span<const LinMap> coordinates, const AlgebraPtr& product) {
  if (product->origin().family != AlgebraFamily::Tensor) throw NotATensorAlgebra("tensor_reassemble target");
  const AlgebraPtr& a = product->origin().first;
  const AlgebraPtr& s = product->origin().second;
  const std::size_t da = a->dim(), db = s->dim();
  if (coordinates.size() != db) throw Error("need one coordinate map per basis vector of the second factor");
  for (const auto& c : coordinates) require_same(c.algebra(), a, "tensor coordinate");
  MapBuilder b(product);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < db; ++j) {
      for (std::size_t t = 0; t < db; ++t) {
        for (const auto& term : s->product_terms(t, j)) {
          for (std::size_t p = 0; p < da; ++p) {
            const Scalar& e = coordinates[t].entry(p, i);
            if (!e.is_zero()) b.at(p * db + term.index, i * db + j) += e * term.coeff;
          }
        }
      }
    }
  }
  return b.build();
}

}  // namespace derivlab
