#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "derivlab/identities.hpp"
#include "derivlab/linalg.hpp"

namespace derivlab {

/// Extra linear conditions appended to an identity system.
struct Constraints {
  bool g_eq_h = false;
  bool f_zero = false;
  /// f(x) = 0 for each listed x.
  std::vector<AlgElement> f_annihilates;
};

/// Unknown k + d*j + d^2*m is coordinate k of the image of e_j under map m
/// (m = 0, 1, 2 for f, g, h).
inline std::size_t unknown_index(std::size_t d, std::size_t map, std::size_t col, std::size_t row) {
  return map * d * d + col * d + row;
}

struct LinearSystem {
  AlgebraPtr alg;
  IdentityKind kind;
  Constraints constraints;
  std::size_t unknowns = 0;
  /// Identity rows ordered by (i, j, coordinate, template), constraint rows after them.
  linalg::Matrix rows;
};

/// Rows of every identity instance on ordered basis pairs. Single-map kinds
/// also pin g = h = 0 so that their spaces count maps.
LinearSystem build_system(const AlgebraPtr& alg, IdentityKind kind, const Constraints& constraints = {});

struct SolutionSpace {
  AlgebraPtr alg;
  IdentityKind kind;
  Constraints constraints;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
  std::size_t dim = 0;
  /// Reduced row echelon basis of the space in unknown coordinates.
  linalg::Matrix canonical;
  std::vector<std::size_t> pivots;
  /// The canonical rows read back as triples.
  std::vector<MapTriple> basis;
};

std::vector<Scalar> triple_to_vector(const MapTriple& t);
MapTriple triple_from_vector(const AlgebraPtr& alg, std::span<const Scalar> v);

/// Exact solution space. Needs Q or Z/p; throws CompositeModulusUnsupported otherwise.
SolutionSpace nullspace(const LinearSystem& sys);
SolutionSpace solve(const AlgebraPtr& alg, IdentityKind kind, const Constraints& constraints = {});

struct SpaceVerification {
  bool substitution = false;
  bool rank_nullity = false;
  bool permutation = false;
  bool canonical = false;

  bool ok() const noexcept { return substitution && rank_nullity && permutation && canonical; }
  explicit operator bool() const noexcept { return ok(); }
};

/// Independent checks of a computed space: each basis triple passes the
/// substitution predicate and the constraints, dim = unknowns - rank, a
/// re-elimination of the system after a seeded row/column shuffle has the same
/// rank, and the stored basis is the reduced form of itself.
SpaceVerification verify_space(const SolutionSpace& space, std::uint64_t seed = 0x5eed);

/// Same subspace, by comparison of reduced forms.
bool space_equal(const SolutionSpace& a, const SolutionSpace& b);
/// inner is a subspace of outer.
bool space_contains(const SolutionSpace& outer, const SolutionSpace& inner);

/// (f, g, h) -> (g, h) is injective on the space.
bool project_gh_injectivity(const SolutionSpace& space);
/// g = h on every basis triple.
bool gh_collapse(const SolutionSpace& space);

/// sum_i coeffs[i] * basis[i].
MapTriple combine(const SolutionSpace& space, std::span<const Scalar> coeffs);

}  // namespace derivlab
