#include "derivlab/solver.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "derivlab/errors.hpp"

namespace derivlab {

namespace {

enum class Shape { Plain, LeftMul, RightMul };

// One summand of an identity, linear in the unknown map:
//   Plain:    coeff * M(x)
//   LeftMul:  coeff * y M(x)
//   RightMul: coeff * M(x) y
struct LinearTerm {
  Shape shape;
  std::size_t map;
  AlgElement x;
  std::optional<AlgElement> y;
  long long coeff;
};

constexpr std::size_t F = 0, G = 1, H = 2;

LinearTerm plain(std::size_t m, AlgElement x, long long c = 1) { return {Shape::Plain, m, std::move(x), {}, c}; }
LinearTerm left(const AlgElement& y, std::size_t m, const AlgElement& x, long long c = -1) {
  return {Shape::LeftMul, m, x, y, c};
}
LinearTerm right(std::size_t m, const AlgElement& x, const AlgElement& y, long long c = -1) {
  return {Shape::RightMul, m, x, y, c};
}

// lhs - rhs of the given equation as linear terms.
std::vector<LinearTerm> template_terms(IdentityKind kind, std::size_t eq, const AlgElement& a, const AlgElement& b) {
  switch (kind) {
    case IdentityKind::Derivation:
      return {plain(F, multiply(a, b)), right(F, a, b), left(a, F, b)};
    case IdentityKind::JordanDerivation:
      if (eq == 0) return {plain(F, multiply(a, a)), right(F, a, a), left(a, F, a)};
      return {plain(F, jordan_product(a, b)), right(F, a, b), left(a, F, b), right(F, b, a), left(b, F, a)};
    case IdentityKind::LeftDerivation:
      return {plain(F, multiply(a, b)), left(a, F, b), left(b, F, a)};
    case IdentityKind::GHDerivation:
      if (eq == 0) return {plain(F, multiply(a, b)), right(G, a, b), left(a, H, b)};
      return {plain(F, multiply(a, b)), right(H, a, b), left(a, G, b)};
    case IdentityKind::LeftGHDerivation:
      if (eq == 0) return {plain(F, multiply(a, b)), left(a, G, b), left(b, H, a)};
      return {plain(F, multiply(a, b)), left(a, H, b), left(b, G, a)};
    case IdentityKind::JordanLeftGHDerivation:
      return {plain(F, jordan_product(a, b)), left(a, G, b, -2), left(b, H, a, -2)};
    case IdentityKind::LeftCentralizer:
      return {plain(F, multiply(a, b)), right(F, a, b)};
    case IdentityKind::RightCentralizer:
      return {plain(F, multiply(a, b)), left(a, F, b)};
  }
  throw Error("unhandled identity kind");
}

// Rows for all d output coordinates of one equation.
linalg::Matrix linearize(const StructureAlgebra& alg, std::span<const LinearTerm> terms, std::size_t unknowns) {
  const std::size_t d = alg.dim();
  const RingSpec& ring = alg.ring();
  linalg::Matrix rows(d, linalg::zero_vector(unknowns, ring));
  for (const auto& t : terms) {
    const Scalar c = Scalar::from_int(ring, t.coeff);
    for (std::size_t p = 0; p < d; ++p) {
      if (t.x[p].is_zero()) continue;
      const Scalar xp = c * t.x[p];
      if (t.shape == Shape::Plain) {
        for (std::size_t q = 0; q < d; ++q) rows[q][unknown_index(d, t.map, p, q)] += xp;
        continue;
      }
      // M(e_p) = sum_r M[r,p] e_r, so the unknown M[r,p] contributes y e_r (or e_r y).
      const AlgElement& y = *t.y;
      for (std::size_t s = 0; s < d; ++s) {
        if (y[s].is_zero()) continue;
        const Scalar ys = xp * y[s];
        for (std::size_t r = 0; r < d; ++r) {
          const auto& prod = t.shape == Shape::LeftMul ? alg.product_terms(s, r) : alg.product_terms(r, s);
          for (const auto& term : prod) rows[term.index][unknown_index(d, t.map, p, r)] += ys * term.coeff;
        }
      }
    }
  }
  return rows;
}

void add_constraint_rows(LinearSystem& sys, const Constraints& c, bool pin_gh) {
  const std::size_t d = sys.alg->dim();
  const RingSpec& ring = sys.alg->ring();
  const Scalar one = Scalar::one(ring);
  auto unit_row = [&](std::size_t idx) {
    linalg::Vector row = linalg::zero_vector(sys.unknowns, ring);
    row[idx] = one;
    return row;
  };
  if (pin_gh) {
    for (std::size_t m : {G, H}) {
      for (std::size_t k = 0; k < d * d; ++k) sys.rows.push_back(unit_row(m * d * d + k));
    }
  }
  if (c.g_eq_h) {
    for (std::size_t k = 0; k < d * d; ++k) {
      linalg::Vector row = unit_row(G * d * d + k);
      row[H * d * d + k] = -one;
      sys.rows.push_back(std::move(row));
    }
  }
  if (c.f_zero) {
    for (std::size_t k = 0; k < d * d; ++k) sys.rows.push_back(unit_row(F * d * d + k));
  }
  for (const auto& x : c.f_annihilates) {
    if (!same_algebra(x.algebra(), sys.alg)) throw AlgebraMismatch("f-annihilator constraint");
    const LinearTerm t = plain(F, x);
    for (auto& row : linearize(*sys.alg, std::span(&t, 1), sys.unknowns)) sys.rows.push_back(std::move(row));
  }
}

bool satisfies_constraints(const MapTriple& t, const Constraints& c, bool pin_gh) {
  const LinMap zero = LinMap::zero(t.algebra());
  if (pin_gh && !(t.g == zero && t.h == zero)) return false;
  if (c.g_eq_h && !(t.g == t.h)) return false;
  if (c.f_zero && !(t.f == zero)) return false;
  for (const auto& x : c.f_annihilates) {
    if (!apply(t.f, x).is_zero()) return false;
  }
  return true;
}

void require_comparable(const SolutionSpace& a, const SolutionSpace& b) {
  if (!(a.alg->ring() == b.alg->ring())) throw RingMismatch("spaces over " + a.alg->ring().name() + " and " + b.alg->ring().name());
  if (!same_algebra(a.alg, b.alg)) throw AlgebraMismatch("spaces over different algebras");
}

}  // namespace

LinearSystem build_system(const AlgebraPtr& alg, IdentityKind kind, const Constraints& constraints) {
  const std::size_t d = alg->dim();
  LinearSystem sys{alg, kind, constraints, 3 * d * d, {}};
  std::vector<AlgElement> basis;
  for (std::size_t i = 0; i < d; ++i) basis.push_back(AlgElement::basis(alg, i));

  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<linalg::Matrix> blocks;
      if (kind == IdentityKind::JordanDerivation) {
        if (j < i) continue;
        const auto terms = template_terms(kind, i == j ? 0 : 1, basis[i], basis[j]);
        blocks.push_back(linearize(*alg, terms, sys.unknowns));
      } else {
        for (std::size_t eq = 0; eq < equation_count(kind); ++eq) {
          const auto terms = template_terms(kind, eq, basis[i], basis[j]);
          blocks.push_back(linearize(*alg, terms, sys.unknowns));
        }
      }
      for (std::size_t q = 0; q < d; ++q) {
        for (auto& block : blocks) sys.rows.push_back(std::move(block[q]));
      }
    }
  }
  add_constraint_rows(sys, constraints, single_map_kind(kind));
  return sys;
}

std::vector<Scalar> triple_to_vector(const MapTriple& t) {
  std::vector<Scalar> v;
  v.reserve(3 * t.f.column_major().size());
  for (const LinMap* m : {&t.f, &t.g, &t.h}) {
    const auto entries = m->column_major();
    v.insert(v.end(), entries.begin(), entries.end());
  }
  return v;
}

MapTriple triple_from_vector(const AlgebraPtr& alg, std::span<const Scalar> v) {
  const std::size_t dd = alg->dim() * alg->dim();
  if (v.size() != 3 * dd) throw Error("triple vector must have 3 d^2 entries");
  auto block = [&](std::size_t m) {
    return LinMap(alg, std::vector<Scalar>(v.begin() + static_cast<std::ptrdiff_t>(m * dd),
                                           v.begin() + static_cast<std::ptrdiff_t>((m + 1) * dd)));
  };
  return MapTriple(block(F), block(G), block(H));
}

SolutionSpace nullspace(const LinearSystem& sys) {
  const RingSpec& ring = sys.alg->ring();
  const linalg::Echelon e = linalg::row_reduce(sys.rows, sys.unknowns, ring);
  SolutionSpace space{sys.alg, sys.kind, sys.constraints, sys.unknowns, e.rank(), 0, {}, {}, {}};
  space.canonical = linalg::nullspace(sys.rows, sys.unknowns, ring);
  space.dim = space.canonical.size();
  if (!space.canonical.empty()) space.pivots = linalg::row_reduce(space.canonical, sys.unknowns, ring).pivots;
  for (const auto& v : space.canonical) space.basis.push_back(triple_from_vector(sys.alg, v));
  return space;
}

SolutionSpace solve(const AlgebraPtr& alg, IdentityKind kind, const Constraints& constraints) {
  if (!alg->ring().is_field()) throw CompositeModulusUnsupported("solving over " + alg->ring().name());
  return nullspace(build_system(alg, kind, constraints));
}

SpaceVerification verify_space(const SolutionSpace& space, std::uint64_t seed) {
  SpaceVerification out;
  const bool pin = single_map_kind(space.kind);
  const RingSpec& ring = space.alg->ring();

  out.substitution = space.basis.size() == space.dim;
  for (const auto& t : space.basis) {
    if (!check(space.kind, t) || !satisfies_constraints(t, space.constraints, pin)) {
      out.substitution = false;
      break;
    }
  }

  const LinearSystem sys = build_system(space.alg, space.kind, space.constraints);
  const std::size_t rank = linalg::rank(sys.rows, sys.unknowns, ring);
  out.rank_nullity = rank == space.rank && space.dim + rank == sys.unknowns;

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> col_perm(sys.unknowns);
  std::iota(col_perm.begin(), col_perm.end(), 0);
  std::shuffle(col_perm.begin(), col_perm.end(), rng);
  linalg::Matrix shuffled;
  shuffled.reserve(sys.rows.size());
  for (const auto& row : sys.rows) {
    linalg::Vector r(sys.unknowns);
    for (std::size_t c = 0; c < sys.unknowns; ++c) r[col_perm[c]] = row[c];
    shuffled.push_back(std::move(r));
  }
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  out.permutation = linalg::rank(shuffled, sys.unknowns, ring) == rank;

  out.canonical = space.canonical.size() == space.dim;
  if (out.canonical && space.dim > 0) {
    const linalg::Echelon e = linalg::row_reduce(space.canonical, space.unknowns, ring);
    out.canonical = e.rows == space.canonical;
    for (std::size_t i = 0; out.canonical && i < space.dim; ++i) {
      out.canonical = triple_to_vector(space.basis[i]) == space.canonical[i];
    }
  }
  return out;
}

bool space_equal(const SolutionSpace& a, const SolutionSpace& b) {
  require_comparable(a, b);
  return a.canonical == b.canonical;
}

bool space_contains(const SolutionSpace& outer, const SolutionSpace& inner) {
  require_comparable(outer, inner);
  if (inner.dim == 0) return true;
  if (inner.dim > outer.dim) return false;
  linalg::Echelon e;
  e.rows = outer.canonical;
  e.pivots = outer.pivots;
  e.cols = outer.unknowns;
  e.ring = outer.alg->ring();
  return std::all_of(inner.canonical.begin(), inner.canonical.end(),
                     [&](const linalg::Vector& v) { return linalg::in_row_space(e, v); });
}

bool project_gh_injectivity(const SolutionSpace& space) {
  if (space.dim == 0) return true;
  const std::size_t dd = space.alg->dim() * space.alg->dim();
  linalg::Matrix gh;
  for (const auto& v : space.canonical) gh.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(dd), v.end());
  return linalg::rank(gh, 2 * dd, space.alg->ring()) == space.dim;
}

bool gh_collapse(const SolutionSpace& space) {
  return std::all_of(space.basis.begin(), space.basis.end(), [](const MapTriple& t) { return t.g == t.h; });
}

MapTriple combine(const SolutionSpace& space, std::span<const Scalar> coeffs) {
  if (coeffs.size() != space.dim) throw Error("need one coefficient per basis triple");
  MapTriple out = MapTriple::zero(space.alg);
  for (std::size_t i = 0; i < space.dim; ++i) out = out + coeffs[i] * space.basis[i];
  return out;
}

}  // namespace derivlab
