#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "derivlab/algebra.hpp"

namespace derivlab::cli {

/// Algebra expressions:
///   tn, mn          with order taken from `n`
///   tnN, mnN        e.g. tn3, mn2
///   quat            quaternions (rationals only)
///   ring            the coefficient ring as an algebra
///   diagN           product of N copies of the ring
///   poly:D:E        E[x]/(x^{D+1})
///   tensor:E1,E2    E1 (x) E2
AlgebraPtr parse_algebra(std::string_view expr, const RingSpec& ring, std::optional<std::size_t> n = std::nullopt);

/// Expression that rebuilds `alg`, if it came from the named constructors.
std::optional<std::string> algebra_name(const StructureAlgebra& alg);

}  // namespace derivlab::cli
