#include "derivlab/cli/json_io.hpp"

#include "derivlab/cli/algebra_expr.hpp"
#include "derivlab/errors.hpp"

namespace derivlab::cli {

namespace {

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::size_t as_size(const Json& doc, const char* what) {
  if (!doc.is_number_unsigned() && !(doc.is_number_integer() && doc.get<long long>() >= 0)) {
    throw ParseError(std::string(what) + " must be a non-negative integer");
  }
  return doc.get<std::size_t>();
}

const Json& array_of(const Json& doc, std::size_t n, const char* what) {
  if (!doc.is_array() || doc.size() != n) {
    throw ParseError(std::string(what) + " must be an array of length " + std::to_string(n));
  }
  return doc;
}

}  // namespace

Json ring_to_json(const RingSpec& ring) {
  if (ring.is_rationals()) return Json{{"kind", "Q"}};
  return Json{{"kind", "Zmod"}, {"m", ring.modulus()}};
}

RingSpec ring_from_json(const Json& doc) {
  if (doc.is_string()) return parse_ring(doc.get<std::string>());
  const Json& kind = field(doc, "kind");
  if (!kind.is_string()) throw ParseError("ring kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "Q") return RingSpec::rationals();
  if (k == "Zmod") {
    const Json& m = field(doc, "m");
    if (!m.is_number_integer()) throw ParseError("ring modulus must be an integer");
    return RingSpec::integers_mod(m.get<std::int64_t>());
  }
  throw ParseError("unknown ring kind '" + k + "'");
}

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& doc, const RingSpec& ring) {
  if (doc.is_number_integer()) return Scalar::from_int(ring, doc.get<long long>());
  if (doc.is_string()) return Scalar::parse(doc.get<std::string>(), ring);
  throw ParseError("scalar must be a string or an integer");
}

Json element_to_json(const AlgElement& x) {
  Json out = Json::array();
  for (const auto& s : x.coords()) out.push_back(scalar_to_json(s));
  return out;
}

AlgElement element_from_json(const Json& doc, const AlgebraPtr& alg) {
  array_of(doc, alg->dim(), "element");
  std::vector<Scalar> coords;
  for (const auto& s : doc) coords.push_back(scalar_from_json(s, alg->ring()));
  return AlgElement(alg, std::move(coords));
}

Json algebra_to_json(const StructureAlgebra& alg) {
  const std::size_t d = alg.dim();
  Json sc = Json::array();
  for (std::size_t i = 0; i < d; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < d; ++j) {
      Json cell = Json::array();
      for (std::size_t k = 0; k < d; ++k) cell.push_back(scalar_to_json(alg.constant(i, j, k)));
      row.push_back(std::move(cell));
    }
    sc.push_back(std::move(row));
  }
  Json unity = Json::array();
  for (const auto& s : alg.unity()) unity.push_back(scalar_to_json(s));
  return Json{{"ring", ring_to_json(alg.ring())}, {"dim", d},           {"labels", alg.labels()},
              {"unity", std::move(unity)},        {"sc", std::move(sc)}};
}

Json algebra_ref(const AlgebraPtr& alg) {
  if (auto name = algebra_name(*alg)) return *name;
  return algebra_to_json(*alg);
}

AlgebraPtr algebra_from_json(const Json& doc, const RingSpec& ring) {
  if (doc.is_string()) return parse_algebra(doc.get<std::string>(), ring);
  if (!doc.is_object()) throw ParseError("algebra must be an expression string or an object");
  const RingSpec r = doc.contains("ring") ? ring_from_json(doc.at("ring")) : ring;
  const std::size_t d = as_size(field(doc, "dim"), "dim");
  if (d == 0) throw ParseError("dim must be positive");

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    for (const auto& l : array_of(doc.at("labels"), d, "labels")) {
      if (!l.is_string()) throw ParseError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < d; ++i) labels.push_back("e" + std::to_string(i + 1));
  }

  std::vector<Scalar> constants;
  constants.reserve(d * d * d);
  for (const auto& row : array_of(field(doc, "sc"), d, "sc")) {
    for (const auto& cell : array_of(row, d, "sc row")) {
      for (const auto& s : array_of(cell, d, "sc cell")) constants.push_back(scalar_from_json(s, r));
    }
  }
  std::vector<Scalar> unity;
  for (const auto& s : array_of(field(doc, "unity"), d, "unity")) unity.push_back(scalar_from_json(s, r));
  return std::make_shared<const StructureAlgebra>(r, std::move(labels), std::move(constants), std::move(unity));
}

Json map_to_json(const LinMap& map) {
  const std::size_t d = map.dim();
  Json matrix = Json::array();
  for (std::size_t k = 0; k < d; ++k) {
    Json row = Json::array();
    for (std::size_t j = 0; j < d; ++j) row.push_back(scalar_to_json(map.entry(k, j)));
    matrix.push_back(std::move(row));
  }
  return Json{{"matrix", std::move(matrix)}};
}

LinMap map_from_json(const Json& doc, AlgebraPtr alg, const RingSpec& ring) {
  const RingSpec r = doc.is_object() && doc.contains("ring") ? ring_from_json(doc.at("ring")) : ring;
  if (doc.is_object() && doc.contains("algebra")) alg = algebra_from_json(doc.at("algebra"), r);
  if (!alg) throw ParseError("map document names no algebra");
  const std::size_t d = alg->dim();
  std::vector<Scalar> entries(d * d, Scalar::zero(alg->ring()));
  const Json& matrix = array_of(field(doc, "matrix"), d, "matrix");
  for (std::size_t k = 0; k < d; ++k) {
    const Json& row = array_of(matrix[k], d, "matrix row");
    for (std::size_t j = 0; j < d; ++j) entries[j * d + k] = scalar_from_json(row[j], alg->ring());
  }
  return LinMap(alg, std::move(entries));
}

Json triple_to_json(const MapTriple& t, bool with_algebra) {
  Json out = Json::object();
  if (with_algebra) {
    out["algebra"] = algebra_ref(t.algebra());
    out["ring"] = ring_to_json(t.algebra()->ring());
  }
  out["f"] = map_to_json(t.f);
  out["g"] = map_to_json(t.g);
  out["h"] = map_to_json(t.h);
  return out;
}

MapTriple triple_from_json(const Json& doc, const RingSpec& ring, AlgebraPtr alg) {
  if (!doc.is_object()) throw ParseError("triple must be an object");
  const RingSpec r = doc.contains("ring") ? ring_from_json(doc.at("ring")) : ring;
  if (doc.contains("algebra")) alg = algebra_from_json(doc.at("algebra"), r);
  LinMap f = map_from_json(field(doc, "f"), alg, r);
  LinMap g = map_from_json(field(doc, "g"), f.algebra(), r);
  LinMap h = map_from_json(field(doc, "h"), f.algebra(), r);
  return MapTriple(std::move(f), std::move(g), std::move(h));
}

Json check_report_to_json(IdentityKind kind, const MapTriple& t, const CheckReport& report) {
  Json out{{"kind", kind_name(kind)}, {"holds", report.holds}};
  if (report.counterexample) {
    const Counterexample& c = *report.counterexample;
    const auto& labels = t.algebra()->labels();
    out["counterexample"] = Json{{"i", c.i},
                                 {"j", c.j},
                                 {"a", labels[c.i]},
                                 {"b", labels[c.j]},
                                 {"equation", c.equation},
                                 {"lhs", element_to_json(c.lhs)},
                                 {"rhs", element_to_json(c.rhs)},
                                 {"lhs_text", c.lhs.to_string()},
                                 {"rhs_text", c.rhs.to_string()}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

Json constraints_to_json(const Constraints& c) {
  Json ann = Json::array();
  for (const auto& x : c.f_annihilates) ann.push_back(element_to_json(x));
  return Json{{"g_eq_h", c.g_eq_h}, {"f_zero", c.f_zero}, {"f_annihilates", std::move(ann)}};
}

Json space_to_json(const SolutionSpace& space) {
  Json basis = Json::array();
  for (const auto& t : space.basis) basis.push_back(triple_to_json(t, false));
  Json canonical = Json::array();
  for (const auto& row : space.canonical) {
    Json r = Json::array();
    for (const auto& s : row) r.push_back(scalar_to_json(s));
    canonical.push_back(std::move(r));
  }
  return Json{{"algebra", algebra_ref(space.alg)},
              {"ring", ring_to_json(space.alg->ring())},
              {"kind", kind_name(space.kind)},
              {"constraints", constraints_to_json(space.constraints)},
              {"unknowns", space.unknowns},
              {"rank", space.rank},
              {"dim", space.dim},
              {"basis", std::move(basis)},
              {"canonical", std::move(canonical)}};
}

Json system_to_json(const LinearSystem& sys) {
  Json rows = Json::array();
  for (const auto& row : sys.rows) {
    Json r = Json::array();
    for (const auto& s : row) r.push_back(scalar_to_json(s));
    rows.push_back(std::move(r));
  }
  return Json{{"algebra", algebra_ref(sys.alg)},
              {"ring", ring_to_json(sys.alg->ring())},
              {"kind", kind_name(sys.kind)},
              {"constraints", constraints_to_json(sys.constraints)},
              {"layout", "index = map*d^2 + j*d + k; map 0,1,2 = f,g,h; entry k of the image of e_j"},
              {"unknowns", sys.unknowns},
              {"rows", std::move(rows)}};
}

}  // namespace derivlab::cli
