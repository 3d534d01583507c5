#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "derivlab/linmap.hpp"

namespace derivlab {

enum class IdentityKind {
  Derivation,              // D(ab) = D(a)b + aD(b)
  JordanDerivation,        // D(a^2) = D(a)a + aD(a)
  LeftDerivation,          // f(ab) = af(b) + bf(a)
  GHDerivation,            // f(ab) = g(a)b + ah(b) = h(a)b + ag(b)
  LeftGHDerivation,        // f(ab) = ag(b) + bh(a) = ah(b) + bg(a)
  JordanLeftGHDerivation,  // f(a o b) = 2(ag(b) + bh(a))
  LeftCentralizer,         // f(ab) = f(a)b
  RightCentralizer,        // f(ab) = af(b)
};

inline constexpr IdentityKind kAllKinds[] = {
    IdentityKind::Derivation,       IdentityKind::JordanDerivation,       IdentityKind::LeftDerivation,
    IdentityKind::GHDerivation,     IdentityKind::LeftGHDerivation,       IdentityKind::JordanLeftGHDerivation,
    IdentityKind::LeftCentralizer,  IdentityKind::RightCentralizer,
};

/// CLI name, e.g. "jordan-left-gh".
std::string_view kind_name(IdentityKind kind) noexcept;
/// Accepts the CLI names.
IdentityKind parse_kind(std::string_view text);

/// Only f takes part; g and h are ignored by the checks.
bool single_map_kind(IdentityKind kind) noexcept;
/// Number of equations compared per pair (two for the {g,h} forms with two equalities).
std::size_t equation_count(IdentityKind kind) noexcept;

struct Counterexample {
  std::size_t i = 0;
  std::size_t j = 0;
  /// Which equality failed, 0 or 1.
  std::size_t equation = 0;
  AlgElement lhs;
  AlgElement rhs;
};

struct CheckReport {
  bool holds = true;
  std::optional<Counterexample> counterexample;

  explicit operator bool() const noexcept { return holds; }
};

struct Evaluation {
  AlgElement lhs;
  AlgElement rhs;
};

/// Both sides of `equation` at the elements (a, b). For JordanDerivation,
/// equation 0 is the square form at a and equation 1 the polarized form.
Evaluation evaluate(IdentityKind kind, const MapTriple& t, const AlgElement& a, const AlgElement& b,
                    std::size_t equation = 0);

/// Scans ordered basis pairs lexicographically; the first failing pair wins,
/// and within a pair equation 0 is tried before equation 1.
CheckReport check(IdentityKind kind, const MapTriple& t);

/// Re-evaluates a reported counterexample from scratch: true iff lhs/rhs match
/// a fresh evaluation and differ.
bool reverify(IdentityKind kind, const MapTriple& t, const Counterexample& c);

CheckReport is_derivation(const LinMap& d);
CheckReport is_jordan_derivation(const LinMap& d);
CheckReport is_left_derivation(const LinMap& f);
CheckReport is_gh_derivation(const MapTriple& t);
CheckReport is_left_gh_derivation(const MapTriple& t);
CheckReport is_jordan_left_gh_derivation(const MapTriple& t);
CheckReport is_left_centralizer(const LinMap& f);
CheckReport is_right_centralizer(const LinMap& f);

/// f viewed as a triple (f, 0, 0).
MapTriple single(const LinMap& f);

struct LeftGHDecomposition {
  AlgElement lambda;
  bool lambda_central = false;
  LinMap d;
  CheckReport d_left_derivation;
};

/// lambda = g(1) + h(1), d = f - L_lambda. Throws PreconditionFailed unless t is
/// a left {g,h}-derivation.
LeftGHDecomposition decompose_left_gh(const MapTriple& t);

/// Left {g,h}-derivation check of (f, g+h, g+h). Throws PreconditionFailed unless
/// t is a Jordan left {g,h}-derivation.
CheckReport audit_remark_14(const MapTriple& t);

}  // namespace derivlab
