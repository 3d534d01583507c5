#pragma once

#include <json.hpp>

#include "derivlab/solver.hpp"

namespace derivlab::cli {

using Json = nlohmann::ordered_json;

/// {"kind":"Q"} or {"kind":"Zmod","m":m}. Reading also accepts the short
/// string forms understood by parse_ring.
Json ring_to_json(const RingSpec& ring);
RingSpec ring_from_json(const Json& doc);

Json scalar_to_json(const Scalar& s);
/// Strings in scalar text form or JSON integers.
Scalar scalar_from_json(const Json& doc, const RingSpec& ring);

Json element_to_json(const AlgElement& x);
AlgElement element_from_json(const Json& doc, const AlgebraPtr& alg);

/// {"ring","dim","labels","unity","sc"} with sc[i][j][k] = c_ij^k.
Json algebra_to_json(const StructureAlgebra& alg);
/// Expression name when the algebra came from a named constructor, otherwise the inline document.
Json algebra_ref(const AlgebraPtr& alg);
/// An inline document, or an expression string resolved over `ring`.
AlgebraPtr algebra_from_json(const Json& doc, const RingSpec& ring);

/// {"matrix": M} with M[k][j] = coordinate k of the image of e_j.
Json map_to_json(const LinMap& map);
/// A map document; its "algebra" field overrides `alg` when present.
LinMap map_from_json(const Json& doc, AlgebraPtr alg, const RingSpec& ring);

/// {"algebra","ring","f","g","h"}; the per-map documents carry only matrices.
Json triple_to_json(const MapTriple& t, bool with_algebra = true);
/// Reads the algebra from the top level or from the f document. A "ring" field
/// overrides `ring`.
MapTriple triple_from_json(const Json& doc, const RingSpec& ring, AlgebraPtr alg = nullptr);

Json check_report_to_json(IdentityKind kind, const MapTriple& t, const CheckReport& report);
Json space_to_json(const SolutionSpace& space);
Json system_to_json(const LinearSystem& sys);
Json constraints_to_json(const Constraints& c);

}  // namespace derivlab::cli
