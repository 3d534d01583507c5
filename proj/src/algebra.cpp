#include "derivlab/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "derivlab/errors.hpp"
#include "derivlab/linalg.hpp"

namespace derivlab {

namespace {

std::string unit_label(std::size_t n, std::size_t i, std::size_t j) {
  if (n < 10) return "e" + std::to_string(i) + std::to_string(j);
  return "e" + std::to_string(i) + "," + std::to_string(j);
}

struct TableBuilder {
  TableBuilder(const RingSpec& r, std::size_t d)
      : ring(r), dim(d), constants(d * d * d, Scalar::zero(r)), unity(d, Scalar::zero(r)) {}

  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return constants[(i * dim + j) * dim + k]; }

  RingSpec ring;
  std::size_t dim;
  std::vector<Scalar> constants;
  std::vector<Scalar> unity;
};

// Matrix-unit algebra on the index pairs accepted by `keep`.
template <class Keep>
AlgebraPtr matrix_units(std::size_t n, const RingSpec& ring, AlgebraFamily family, Keep keep) {
  if (n < 1) throw Error("matrix size must be at least 1");
  std::vector<std::pair<std::size_t, std::size_t>> units;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (keep(i, j)) {
        units.emplace_back(i, j);
        labels.push_back(unit_label(n, i, j));
      }
    }
  }
  const std::size_t d = units.size();
  auto index = [&](std::size_t i, std::size_t j) {
    for (std::size_t p = 0; p < d; ++p) {
      if (units[p] == std::pair{i, j}) return p;
    }
    throw Error("matrix unit outside the algebra");
  };
  TableBuilder t(ring, d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      if (units[a].second == units[b].first) t.at(a, b, index(units[a].first, units[b].second)) = Scalar::one(ring);
    }
  }
  for (std::size_t i = 1; i <= n; ++i) t.unity[index(i, i)] = Scalar::one(ring);
  AlgebraOrigin origin;
  origin.family = family;
  origin.order = n;
  return std::make_shared<const StructureAlgebra>(ring, std::move(labels), std::move(t.constants),
                                                  std::move(t.unity), std::move(origin));
}

void require_same(const AlgElement& a, const AlgElement& b, const char* op) {
  if (!same_algebra(a.algebra(), b.algebra())) throw AlgebraMismatch(op);
}

}  // namespace

StructureAlgebra::StructureAlgebra(RingSpec ring, std::vector<std::string> labels, std::vector<Scalar> constants,
                                   std::vector<Scalar> unity, AlgebraOrigin origin)
    : ring_(ring),
      labels_(std::move(labels)),
      constants_(std::move(constants)),
      unity_(std::move(unity)),
      origin_(std::move(origin)) {
  const std::size_t d = labels_.size();
  if (d == 0) throw Error("algebra dimension must be positive");
  if (constants_.size() != d * d * d) throw Error("structure constant table must have dim^3 entries");
  if (unity_.size() != d) throw Error("unity must have dim coordinates");
  for (const auto& s : constants_) {
    if (!(s.ring() == ring_)) throw RingMismatch("structure constant " + s.to_string() + " not in " + ring_.name());
  }
  for (const auto& s : unity_) {
    if (!(s.ring() == ring_)) throw RingMismatch("unity coordinate " + s.to_string() + " not in " + ring_.name());
  }
  sparse_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar& c = constant(i, j, k);
        if (!c.is_zero()) sparse_[i * d + j].push_back({k, c});
      }
    }
  }
}

std::optional<std::size_t> StructureAlgebra::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

bool StructureAlgebra::same_table(const StructureAlgebra& other) const {
  return ring_ == other.ring_ && labels_ == other.labels_ && constants_ == other.constants_ && unity_ == other.unity_;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_table(*b);
}

AlgElement::AlgElement(AlgebraPtr alg, std::vector<Scalar> coords) : alg_(std::move(alg)), coords_(std::move(coords)) {
  if (!alg_) throw Error("element without an algebra");
  if (coords_.size() != alg_->dim()) throw Error("element length does not match algebra dimension");
  for (const auto& s : coords_) {
    if (!(s.ring() == alg_->ring())) throw RingMismatch("coordinate " + s.to_string() + " not in " + alg_->ring().name());
  }
}

AlgElement AlgElement::zero(const AlgebraPtr& alg) {
  return AlgElement(alg, std::vector<Scalar>(alg->dim(), Scalar::zero(alg->ring())));
}

AlgElement AlgElement::basis(const AlgebraPtr& alg, std::size_t i) {
  if (i >= alg->dim()) throw Error("basis index out of range");
  std::vector<Scalar> c(alg->dim(), Scalar::zero(alg->ring()));
  c[i] = Scalar::one(alg->ring());
  return AlgElement(alg, std::move(c));
}

AlgElement AlgElement::unity(const AlgebraPtr& alg) { return AlgElement(alg, alg->unity()); }

AlgElement AlgElement::of(const AlgebraPtr& alg,
                          std::initializer_list<std::pair<std::string_view, long long>> terms) {
  AlgElement x = zero(alg);
  for (const auto& [label, c] : terms) {
    const auto i = alg->index_of(label);
    if (!i) throw Error("no basis vector labelled '" + std::string(label) + "'");
    x.coords_[*i] += Scalar::from_int(alg->ring(), c);
  }
  return x;
}

bool AlgElement::is_zero() const {
  for (const auto& s : coords_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

std::string AlgElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Scalar& c = coords_[i];
    if (c.is_zero()) continue;
    const std::string& label = alg_->labels()[i];
    std::string text = c.to_string();
    const bool rational = c.ring().is_rationals();
    bool negative = rational && sgn(c.rational_value()) < 0;
    if (negative) text = (-c).to_string();
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
    if (!rational) {
      os << "(" << text << ")" << label;
    } else if (text == "1") {
      os << label;
    } else if (label == "1") {
      os << text;
    } else {
      os << text << label;
    }
  }
  if (first) return "0";
  return os.str();
}

AlgElement& AlgElement::operator+=(const AlgElement& other) {
  require_same(*this, other, "sum");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& other) {
  require_same(*this, other, "difference");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

AlgElement AlgElement::operator-() const {
  AlgElement x = *this;
  for (auto& s : x.coords_) s = -s;
  return x;
}

AlgElement operator*(const Scalar& s, const AlgElement& a) {
  AlgElement x = a;
  for (auto& c : x.coords_) c *= s;
  return x;
}

AlgElement operator*(long long s, const AlgElement& a) { return Scalar::from_int(a.algebra()->ring(), s) * a; }

bool operator==(const AlgElement& a, const AlgElement& b) {
  return same_algebra(a.alg_, b.alg_) && a.coords_ == b.coords_;
}

AlgElement multiply(const AlgElement& a, const AlgElement& b) {
  require_same(a, b, "product");
  const StructureAlgebra& alg = *a.algebra();
  std::vector<Scalar> out(alg.dim(), Scalar::zero(alg.ring()));
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      if (b[j].is_zero()) continue;
      const Scalar ab = a[i] * b[j];
      for (const auto& term : alg.product_terms(i, j)) out[term.index] += ab * term.coeff;
    }
  }
  return AlgElement(a.algebra(), std::move(out));
}

AlgElement jordan_product(const AlgElement& a, const AlgElement& b) { return multiply(a, b) + multiply(b, a); }

ValidationReport validate(const StructureAlgebra& alg) {
  const std::size_t d = alg.dim();
  const RingSpec& ring = alg.ring();
  std::vector<Scalar> left(d), right(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        std::fill(left.begin(), left.end(), Scalar::zero(ring));
        std::fill(right.begin(), right.end(), Scalar::zero(ring));
        // (e_i e_j) e_k
        for (const auto& ij : alg.product_terms(i, j)) {
          for (const auto& pk : alg.product_terms(ij.index, k)) left[pk.index] += ij.coeff * pk.coeff;
        }
        // e_i (e_j e_k)
        for (const auto& jk : alg.product_terms(j, k)) {
          for (const auto& ip : alg.product_terms(i, jk.index)) right[ip.index] += jk.coeff * ip.coeff;
        }
        if (left != right) return {false, ValidationReport::Failure::Associativity, {i, j, k}};
      }
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    std::fill(left.begin(), left.end(), Scalar::zero(ring));
    std::fill(right.begin(), right.end(), Scalar::zero(ring));
    for (std::size_t p = 0; p < d; ++p) {
      const Scalar& u = alg.unity()[p];
      if (u.is_zero()) continue;
      for (const auto& t : alg.product_terms(p, i)) left[t.index] += u * t.coeff;
      for (const auto& t : alg.product_terms(i, p)) right[t.index] += u * t.coeff;
    }
    std::vector<Scalar> expected(d, Scalar::zero(ring));
    expected[i] = Scalar::one(ring);
    if (left != expected) return {false, ValidationReport::Failure::LeftUnity, {i, 0, 0}};
    if (right != expected) return {false, ValidationReport::Failure::RightUnity, {i, 0, 0}};
  }
  return {};
}

AlgebraPtr full_matrix(std::size_t n, const RingSpec& ring) {
  return matrix_units(n, ring, AlgebraFamily::FullMatrix, [](std::size_t, std::size_t) { return true; });
}

AlgebraPtr upper_triangular(std::size_t n, const RingSpec& ring) {
  return matrix_units(n, ring, AlgebraFamily::UpperTriangular, [](std::size_t i, std::size_t j) { return i <= j; });
}

AlgebraPtr quaternions() {
  const RingSpec q = RingSpec::rationals();
  TableBuilder t(q, 4);
  const auto set = [&](std::size_t a, std::size_t b, std::size_t c, int sign) {
    t.at(a, b, c) = Scalar::from_int(q, sign);
  };
  // 0 = 1, 1 = i, 2 = j, 3 = k
  for (std::size_t a = 0; a < 4; ++a) {
    set(0, a, a, 1);
    set(a, 0, a, 1);
  }
  set(1, 1, 0, -1);
  set(2, 2, 0, -1);
  set(3, 3, 0, -1);
  set(1, 2, 3, 1);
  set(2, 1, 3, -1);
  set(2, 3, 1, 1);
  set(3, 2, 1, -1);
  set(3, 1, 2, 1);
  set(1, 3, 2, -1);
  t.unity[0] = Scalar::one(q);
  AlgebraOrigin origin;
  origin.family = AlgebraFamily::Quaternions;
  return std::make_shared<const StructureAlgebra>(q, std::vector<std::string>{"1", "i", "j", "k"},
                                                  std::move(t.constants), std::move(t.unity), std::move(origin));
}

AlgebraPtr ring_as_algebra(const RingSpec& ring) {
  AlgebraOrigin origin;
  origin.family = AlgebraFamily::RingAsAlgebra;
  return std::make_shared<const StructureAlgebra>(ring, std::vector<std::string>{"1"},
                                                  std::vector<Scalar>{Scalar::one(ring)},
                                                  std::vector<Scalar>{Scalar::one(ring)}, std::move(origin));
}

AlgebraPtr diagonal(std::size_t n, const RingSpec& ring) {
  if (n < 1) throw Error("diagonal algebra needs at least one factor");
  TableBuilder t(ring, n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    t.at(i, i, i) = Scalar::one(ring);
    t.unity[i] = Scalar::one(ring);
    labels.push_back("u" + std::to_string(i + 1));
  }
  AlgebraOrigin origin;
  origin.family = AlgebraFamily::Diagonal;
  origin.order = n;
  return std::make_shared<const StructureAlgebra>(ring, std::move(labels), std::move(t.constants),
                                                  std::move(t.unity), std::move(origin));
}

AlgebraPtr tensor_product(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!(a->ring() == b->ring())) throw RingMismatch(a->ring().name() + " (x) " + b->ring().name());
  if (!a->ring().is_field()) throw NonFieldRing(a->ring().name());
  const RingSpec& ring = a->ring();
  const std::size_t da = a->dim(), db = b->dim(), d = da * db;
  TableBuilder t(ring, d);
  std::vector<std::string> labels;
  labels.reserve(d);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < db; ++j) labels.push_back(a->labels()[i] + "⊗" + b->labels()[j]);
  }
  for (std::size_t i1 = 0; i1 < da; ++i1) {
    for (std::size_t j1 = 0; j1 < db; ++j1) {
      for (std::size_t i2 = 0; i2 < da; ++i2) {
        for (std::size_t j2 = 0; j2 < db; ++j2) {
          for (const auto& ta : a->product_terms(i1, i2)) {
            for (const auto& tb : b->product_terms(j1, j2)) {
              t.at(i1 * db + j1, i2 * db + j2, ta.index * db + tb.index) = ta.coeff * tb.coeff;
            }
          }
        }
      }
    }
  }
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < db; ++j) t.unity[i * db + j] = a->unity()[i] * b->unity()[j];
  }
  AlgebraOrigin origin;
  origin.family = AlgebraFamily::Tensor;
  origin.first = a;
  origin.second = b;
  return std::make_shared<const StructureAlgebra>(ring, std::move(labels), std::move(t.constants),
                                                  std::move(t.unity), std::move(origin));
}

AlgebraPtr truncated_poly(const AlgebraPtr& a, std::size_t degree, std::string variable) {
  const RingSpec& ring = a->ring();
  const std::size_t da = a->dim(), levels = degree + 1, d = da * levels;
  TableBuilder t(ring, d);
  std::vector<std::string> labels;
  labels.reserve(d);
  for (std::size_t s = 0; s < levels; ++s) {
    const std::string power = s == 0 ? "" : s == 1 ? variable : variable + "^" + std::to_string(s);
    for (std::size_t i = 0; i < da; ++i) {
      const std::string& base = a->labels()[i];
      if (s == 0) labels.push_back(base);
      else if (base == "1") labels.push_back(power);
      else labels.push_back(base + " " + power);
    }
  }
  for (std::size_t s = 0; s < levels; ++s) {
    for (std::size_t u = 0; s + u < levels; ++u) {
      for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < da; ++j) {
          for (const auto& term : a->product_terms(i, j)) {
            t.at(s * da + i, u * da + j, (s + u) * da + term.index) = term.coeff;
          }
        }
      }
    }
  }
  for (std::size_t i = 0; i < da; ++i) t.unity[i] = a->unity()[i];
  AlgebraOrigin origin;
  origin.family = AlgebraFamily::TruncatedPoly;
  origin.degree = degree;
  origin.variable = std::move(variable);
  origin.first = a;
  return std::make_shared<const StructureAlgebra>(ring, std::move(labels), std::move(t.constants),
                                                  std::move(t.unity), std::move(origin));
}

std::size_t matrix_unit(const StructureAlgebra& alg, std::size_t i, std::size_t j) {
  const auto family = alg.origin().family;
  if (family != AlgebraFamily::FullMatrix && family != AlgebraFamily::UpperTriangular) {
    throw Error("matrix units only exist in M_n and T_n");
  }
  const auto index = alg.index_of(unit_label(alg.origin().order, i, j));
  if (!index) throw Error("e" + std::to_string(i) + std::to_string(j) + " is not a basis vector");
  return *index;
}

bool is_commutative(const StructureAlgebra& alg) {
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = i + 1; j < alg.dim(); ++j) {
      for (std::size_t k = 0; k < alg.dim(); ++k) {
        if (!(alg.constant(i, j, k) == alg.constant(j, i, k))) return false;
      }
    }
  }
  return true;
}

std::vector<AlgElement> center_basis(const AlgebraPtr& alg) {
  const std::size_t d = alg->dim();
  const RingSpec& ring = alg->ring();
  if (!ring.is_field()) throw CompositeModulusUnsupported("center of an algebra over " + ring.name());
  // Row (i, q): coordinate q of x e_i - e_i x as a linear form in x.
  linalg::Matrix rows;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t q = 0; q < d; ++q) {
      linalg::Vector row = linalg::zero_vector(d, ring);
      for (std::size_t p = 0; p < d; ++p) row[p] = alg->constant(p, i, q) - alg->constant(i, p, q);
      rows.push_back(std::move(row));
    }
  }
  std::vector<AlgElement> out;
  for (auto& v : linalg::nullspace(rows, d, ring)) out.emplace_back(alg, std::move(v));
  return out;
}

bool is_central(const AlgElement& x) {
  const AlgebraPtr& alg = x.algebra();
  for (std::size_t i = 0; i < alg->dim(); ++i) {
    const AlgElement e = AlgElement::basis(alg, i);
    if (!(multiply(x, e) == multiply(e, x))) return false;
  }
  return true;
}

}  // namespace derivlab
