#include "derivlab/identities.hpp"

#include <array>

#include "derivlab/errors.hpp"

namespace derivlab {

namespace {

struct KindName {
  IdentityKind kind;
  std::string_view name;
};

constexpr std::array<KindName, 8> kNames{{
    {IdentityKind::Derivation, "derivation"},
    {IdentityKind::JordanDerivation, "jordan-derivation"},
    {IdentityKind::LeftDerivation, "left-derivation"},
    {IdentityKind::GHDerivation, "gh-derivation"},
    {IdentityKind::LeftGHDerivation, "left-gh"},
    {IdentityKind::JordanLeftGHDerivation, "jordan-left-gh"},
    {IdentityKind::LeftCentralizer, "left-centralizer"},
    {IdentityKind::RightCentralizer, "right-centralizer"},
}};

AlgElement mul(const AlgElement& a, const AlgElement& b) { return multiply(a, b); }

CheckReport scan(IdentityKind kind, const MapTriple& t) {
  const AlgebraPtr& alg = t.algebra();
  const std::size_t d = alg->dim();
  const std::size_t equations = equation_count(kind);
  std::vector<AlgElement> basis;
  basis.reserve(d);
  for (std::size_t i = 0; i < d; ++i) basis.push_back(AlgElement::basis(alg, i));

  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (kind == IdentityKind::JordanDerivation) {
        // Quadratic: squares on the diagonal, the polarized form above it.
        if (j < i) continue;
        const std::size_t eq = i == j ? 0 : 1;
        Evaluation e = evaluate(kind, t, basis[i], basis[j], eq);
        if (!(e.lhs == e.rhs)) return {false, Counterexample{i, j, eq, std::move(e.lhs), std::move(e.rhs)}};
        continue;
      }
      for (std::size_t eq = 0; eq < equations; ++eq) {
        Evaluation e = evaluate(kind, t, basis[i], basis[j], eq);
        if (!(e.lhs == e.rhs)) return {false, Counterexample{i, j, eq, std::move(e.lhs), std::move(e.rhs)}};
      }
    }
  }
  return {};
}

}  // namespace

std::string_view kind_name(IdentityKind kind) noexcept {
  for (const auto& k : kNames) {
    if (k.kind == kind) return k.name;
  }
  return "unknown";
}

IdentityKind parse_kind(std::string_view text) {
  for (const auto& k : kNames) {
    if (k.name == text) return k.kind;
  }
  throw ParseError("unknown identity kind '" + std::string(text) + "'");
}

bool single_map_kind(IdentityKind kind) noexcept {
  switch (kind) {
    case IdentityKind::GHDerivation:
    case IdentityKind::LeftGHDerivation:
    case IdentityKind::JordanLeftGHDerivation:
      return false;
    default:
      return true;
  }
}

std::size_t equation_count(IdentityKind kind) noexcept {
  switch (kind) {
    case IdentityKind::GHDerivation:
    case IdentityKind::LeftGHDerivation:
    case IdentityKind::JordanDerivation:
      return 2;
    default:
      return 1;
  }
}

Evaluation evaluate(IdentityKind kind, const MapTriple& t, const AlgElement& a, const AlgElement& b,
                    std::size_t equation) {
  if (!same_algebra(a.algebra(), t.algebra()) || !same_algebra(b.algebra(), t.algebra())) {
    throw AlgebraMismatch("identity arguments");
  }
  if (equation >= equation_count(kind)) throw Error("no such equation for " + std::string(kind_name(kind)));
  const LinMap& f = t.f;
  const LinMap& g = t.g;
  const LinMap& h = t.h;
  switch (kind) {
    case IdentityKind::Derivation:
      return {apply(f, mul(a, b)), mul(apply(f, a), b) + mul(a, apply(f, b))};
    case IdentityKind::JordanDerivation:
      if (equation == 0) return {apply(f, mul(a, a)), mul(apply(f, a), a) + mul(a, apply(f, a))};
      return {apply(f, jordan_product(a, b)),
              mul(apply(f, a), b) + mul(a, apply(f, b)) + mul(apply(f, b), a) + mul(b, apply(f, a))};
    case IdentityKind::LeftDerivation:
      return {apply(f, mul(a, b)), mul(a, apply(f, b)) + mul(b, apply(f, a))};
    case IdentityKind::GHDerivation:
      if (equation == 0) return {apply(f, mul(a, b)), mul(apply(g, a), b) + mul(a, apply(h, b))};
      return {apply(f, mul(a, b)), mul(apply(h, a), b) + mul(a, apply(g, b))};
    case IdentityKind::LeftGHDerivation:
      if (equation == 0) return {apply(f, mul(a, b)), mul(a, apply(g, b)) + mul(b, apply(h, a))};
      return {apply(f, mul(a, b)), mul(a, apply(h, b)) + mul(b, apply(g, a))};
    case IdentityKind::JordanLeftGHDerivation:
      return {apply(f, jordan_product(a, b)), 2 * (mul(a, apply(g, b)) + mul(b, apply(h, a)))};
    case IdentityKind::LeftCentralizer:
      return {apply(f, mul(a, b)), mul(apply(f, a), b)};
    case IdentityKind::RightCentralizer:
      return {apply(f, mul(a, b)), mul(a, apply(f, b))};
  }
  throw Error("unhandled identity kind");
}

CheckReport check(IdentityKind kind, const MapTriple& t) { return scan(kind, t); }

bool reverify(IdentityKind kind, const MapTriple& t, const Counterexample& c) {
  const AlgebraPtr& alg = t.algebra();
  if (c.i >= alg->dim() || c.j >= alg->dim()) return false;
  const Evaluation e = evaluate(kind, t, AlgElement::basis(alg, c.i), AlgElement::basis(alg, c.j), c.equation);
  return e.lhs == c.lhs && e.rhs == c.rhs && !(e.lhs == e.rhs);
}

MapTriple single(const LinMap& f) {
  return MapTriple(f, LinMap::zero(f.algebra()), LinMap::zero(f.algebra()));
}

CheckReport is_derivation(const LinMap& d) { return check(IdentityKind::Derivation, single(d)); }
CheckReport is_jordan_derivation(const LinMap& d) { return check(IdentityKind::JordanDerivation, single(d)); }
CheckReport is_left_derivation(const LinMap& f) { return check(IdentityKind::LeftDerivation, single(f)); }
CheckReport is_gh_derivation(const MapTriple& t) { return check(IdentityKind::GHDerivation, t); }
CheckReport is_left_gh_derivation(const MapTriple& t) { return check(IdentityKind::LeftGHDerivation, t); }
CheckReport is_jordan_left_gh_derivation(const MapTriple& t) {
  return check(IdentityKind::JordanLeftGHDerivation, t);
}
CheckReport is_left_centralizer(const LinMap& f) { return check(IdentityKind::LeftCentralizer, single(f)); }
CheckReport is_right_centralizer(const LinMap& f) { return check(IdentityKind::RightCentralizer, single(f)); }

LeftGHDecomposition decompose_left_gh(const MapTriple& t) {
  if (!is_left_gh_derivation(t)) throw PreconditionFailed("triple is not a left {g,h}-derivation");
  const AlgElement one = AlgElement::unity(t.algebra());
  AlgElement lambda = apply(t.g, one) + apply(t.h, one);
  const bool central = is_central(lambda);
  LinMap d = t.f - left_mul_map(lambda);
  CheckReport left = is_left_derivation(d);
  return {std::move(lambda), central, std::move(d), std::move(left)};
}

CheckReport audit_remark_14(const MapTriple& t) {
  if (!is_jordan_left_gh_derivation(t)) throw PreconditionFailed("triple is not a Jordan left {g,h}-derivation");
  const LinMap s = t.g + t.h;
  return is_left_gh_derivation(MapTriple(t.f, s, s));
}

}  // namespace derivlab
