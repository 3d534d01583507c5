#include "derivlab/cli/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "derivlab/cli/algebra_expr.hpp"
#include "derivlab/errors.hpp"

namespace derivlab::cli {

namespace {

using K = IdentityKind;
constexpr K JL = K::JordanLeftGHDerivation;
constexpr K LEFT = K::LeftGHDerivation;

std::vector<Scalar> ints(const RingSpec& ring, std::initializer_list<long long> values) {
  std::vector<Scalar> out;
  for (long long v : values) out.push_back(Scalar::from_int(ring, v));
  return out;
}

AlgElement el(const AlgebraPtr& alg, std::initializer_list<long long> coords) {
  return AlgElement(alg, ints(alg->ring(), coords));
}

std::string show(const AlgElement& x) { return x.to_string(); }

std::string pair_text(const AlgebraPtr& alg, const Counterexample& c) {
  return "(" + alg->labels()[c.i] + ", " + alg->labels()[c.j] + ") eq " + std::to_string(c.equation) + ": " +
         show(c.lhs) + " vs " + show(c.rhs);
}

std::string report_text(const AlgebraPtr& alg, const CheckReport& r) {
  if (r.holds) return "holds";
  return "fails at " + pair_text(alg, *r.counterexample);
}

std::string eval_text(const Evaluation& e) { return show(e.lhs) + " vs " + show(e.rhs); }

// Random integer combination of the basis with coefficients in [-3, 3].
MapTriple random_element(const SolutionSpace& space, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < space.dim; ++i) c.push_back(Scalar::from_int(space.alg->ring(), coeff(rng)));
  return combine(space, c);
}

std::vector<Scalar> random_scalars(std::size_t n, const RingSpec& ring, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Scalar::from_int(ring, coeff(rng)));
  return out;
}

linalg::Matrix span_of(const std::vector<MapTriple>& triples, std::size_t unknowns, const RingSpec& ring) {
  linalg::Matrix rows;
  for (const auto& t : triples) rows.push_back(triple_to_vector(t));
  return linalg::row_reduce(rows, unknowns, ring).rows;
}

std::vector<Scalar> unit(std::size_t n, std::size_t i, const RingSpec& ring) {
  std::vector<Scalar> v(n, Scalar::zero(ring));
  v[i] = Scalar::one(ring);
  return v;
}

bool all_right_centralizers(const SolutionSpace& s) {
  for (const auto& t : s.basis) {
    if (!is_right_centralizer(t.f) || !is_right_centralizer(t.g) || !is_right_centralizer(t.h)) return false;
  }
  return true;
}

std::string dims_text(std::size_t got, std::size_t want) {
  return "dim " + std::to_string(got) + ", expected " + std::to_string(want);
}

// ---------------------------------------------------------------- T_n

void tn_jordan_dim(const RingSpec& ring, Recorder& r) {
  for (std::size_t n = 2; n <= 4; ++n) r.dim("T" + std::to_string(n), solve(upper_triangular(n, ring), JL), n * (n + 3) / 2);
}

void tn_left_dim(const RingSpec& ring, Recorder& r) {
  for (std::size_t n = 2; n <= 4; ++n) r.dim("T" + std::to_string(n), solve(upper_triangular(n, ring), LEFT), 2 * n);
}

void tn_jordan_family_entry(const RingSpec& ring, Recorder& r) {
  std::mt19937_64 rng(2301);
  for (std::size_t n = 2; n <= 4; ++n) {
    const AlgebraPtr tn = upper_triangular(n, ring);
    const std::size_t ng = n * (n + 1) / 2;
    const std::size_t total = ng + n;
    std::vector<MapTriple> family;
    for (std::size_t p = 0; p < total; ++p) {
      const auto v = unit(total, p, ring);
      family.push_back(tn_jordan_family(tn, std::span(v).first(ng), std::span(v).subspan(ng)));
    }
    const SolutionSpace space = solve(tn, JL);
    const auto span = span_of(family, space.unknowns, ring);
    r.expect("T" + std::to_string(n) + " closed form spans the solution space", span == space.canonical,
             "family rank " + std::to_string(span.size()) + ", solution dim " + std::to_string(space.dim));
    bool random_ok = true;
    for (int trial = 0; trial < 10; ++trial) {
      const auto g = random_scalars(ng, ring, rng);
      const auto h = random_scalars(n, ring, rng);
      const MapTriple t = tn_jordan_family(tn, g, h);
      random_ok = random_ok && is_jordan_left_gh_derivation(t) && is_right_centralizer(t.f) &&
                  is_right_centralizer(t.g) && is_right_centralizer(t.h);
    }
    r.expect("T" + std::to_string(n) + " random parameters pass the predicate", random_ok);
  }
}

void tn_left_family_entry(const RingSpec& ring, Recorder& r) {
  std::mt19937_64 rng(2302);
  for (std::size_t n = 2; n <= 4; ++n) {
    const AlgebraPtr tn = upper_triangular(n, ring);
    std::vector<MapTriple> family;
    for (std::size_t p = 0; p < 2 * n; ++p) {
      const auto v = unit(2 * n, p, ring);
      family.push_back(tn_left_family(tn, std::span(v).first(n), std::span(v).subspan(n)));
    }
    const SolutionSpace space = solve(tn, LEFT);
    const auto span = span_of(family, space.unknowns, ring);
    r.expect("T" + std::to_string(n) + " closed form spans the solution space", span == space.canonical,
             "family rank " + std::to_string(span.size()) + ", solution dim " + std::to_string(space.dim));
    bool random_ok = true;
    for (int trial = 0; trial < 10; ++trial) {
      const MapTriple t = tn_left_family(tn, random_scalars(n, ring, rng), random_scalars(n, ring, rng));
      random_ok = random_ok && is_left_gh_derivation(t);
    }
    r.expect("T" + std::to_string(n) + " random parameters pass the predicate", random_ok);
  }
}

void tn_f_determined(const RingSpec& ring, Recorder& r) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const SolutionSpace s = solve(upper_triangular(n, ring), JL);
    bool sum = true;
    for (const auto& t : s.basis) sum = sum && t.f == t.g + t.h;
    r.expect("T" + std::to_string(n) + " projection to (g, h) injective", project_gh_injectivity(s));
    r.expect("T" + std::to_string(n) + " f = g + h on the basis", sum);
  }
}

void tn_right_centralizers(const RingSpec& ring, Recorder& r) {
  for (std::size_t n = 2; n <= 4; ++n) {
    r.expect("T" + std::to_string(n), all_right_centralizers(solve(upper_triangular(n, ring), JL)));
  }
}

// ---------------------------------------------------------------- M_n

void mn_jordan_dim(const RingSpec& ring, Recorder& r) {
  for (std::size_t n = 2; n <= 3; ++n) r.dim("M" + std::to_string(n), solve(full_matrix(n, ring), JL), n * n);
}

void mn_gh_collapse(const RingSpec& ring, Recorder& r) {
  for (std::size_t n = 2; n <= 3; ++n) r.expect("M" + std::to_string(n), gh_collapse(solve(full_matrix(n, ring), JL)));
}

void mn_jordan_family_entry(const RingSpec& ring, Recorder& r) {
  for (std::size_t n = 2; n <= 3; ++n) {
    const AlgebraPtr mn = full_matrix(n, ring);
    std::vector<MapTriple> family;
    for (std::size_t i = 0; i < mn->dim(); ++i) family.push_back(mn_jordan_family(AlgElement::basis(mn, i)));
    const SolutionSpace space = solve(mn, JL);
    r.expect("M" + std::to_string(n) + " (2R_a, R_a, R_a) spans the solution space",
             span_of(family, space.unknowns, ring) == space.canonical);
  }
}

void mn_f_determined(const RingSpec& ring, Recorder& r) {
  for (std::size_t n = 2; n <= 3; ++n) {
    const SolutionSpace s = solve(full_matrix(n, ring), JL);
    bool twice = true;
    for (const auto& t : s.basis) twice = twice && t.f == 2 * t.g;
    r.expect("M" + std::to_string(n) + " projection to (g, h) injective", project_gh_injectivity(s));
    r.expect("M" + std::to_string(n) + " f = 2g on the basis", twice);
  }
}

void mn_right_centralizers(const RingSpec& ring, Recorder& r) {
  for (std::size_t n = 2; n <= 3; ++n) r.expect("M" + std::to_string(n), all_right_centralizers(solve(full_matrix(n, ring), JL)));
}

void mn_left_gg_zero(const RingSpec& ring, Recorder& r) {
  for (std::size_t n = 2; n <= 3; ++n) r.dim("M" + std::to_string(n), solve(full_matrix(n, ring), LEFT, {.g_eq_h = true, .f_zero = false, .f_annihilates = {}}), 0);
}

void mn_left_zero(const RingSpec& ring, Recorder& r) {
  for (std::size_t n = 2; n <= 3; ++n) r.dim("M" + std::to_string(n), solve(full_matrix(n, ring), LEFT), 0);
}

// ---------------------------------------------------------------- quaternions

Constraints f_kills_ijk(const AlgebraPtr& h) {
  Constraints c;
  for (std::size_t i = 1; i < 4; ++i) c.f_annihilates.push_back(AlgElement::basis(h, i));
  return c;
}

void quat_jordan_dim(const RingSpec&, Recorder& r) { r.dim("H", solve(quaternions(), JL), 4); }

void quat_gh_collapse(const RingSpec&, Recorder& r) { r.expect("H", gh_collapse(solve(quaternions(), JL))); }

void quat_jordan_family_entry(const RingSpec&, Recorder& r) {
  const AlgebraPtr h = quaternions();
  std::vector<MapTriple> family;
  for (std::size_t i = 0; i < 4; ++i) family.push_back(quat_jordan_family(AlgElement::basis(h, i)));
  const SolutionSpace space = solve(h, JL);
  r.expect("(2R_a, R_a, R_a) spans the solution space", span_of(family, space.unknowns, h->ring()) == space.canonical);
}

void quat_f_determined(const RingSpec&, Recorder& r) {
  const SolutionSpace s = solve(quaternions(), JL);
  bool twice = true;
  for (const auto& t : s.basis) twice = twice && t.f == 2 * t.g;
  r.expect("projection to (g, h) injective", project_gh_injectivity(s));
  r.expect("f = 2g on the basis", twice);
}

void quat_right_centralizers(const RingSpec&, Recorder& r) { r.expect("H", all_right_centralizers(solve(quaternions(), JL))); }

void quat_left_gg_zero(const RingSpec&, Recorder& r) { r.dim("H", solve(quaternions(), LEFT, {.g_eq_h = true, .f_zero = false, .f_annihilates = {}}), 0); }

void quat_left_criterion(const RingSpec&, Recorder& r) {
  const AlgebraPtr h = quaternions();
  const SolutionSpace left = solve(h, LEFT);
  const SolutionSpace left_c = solve(h, LEFT, f_kills_ijk(h));
  const SolutionSpace jordan_c = solve(h, JL, f_kills_ijk(h));
  r.expect("left space satisfies f(i) = f(j) = f(k) = 0", space_equal(left, left_c));
  r.expect("Jordan-left space cut by f(i) = f(j) = f(k) = 0 equals the left space", space_equal(jordan_c, left));
  r.expect("constrained spaces verify", verify_space(left_c).ok() && verify_space(jordan_c).ok());
}

void quat_jordan_criterion(const RingSpec&, Recorder& r) {
  const AlgebraPtr h = quaternions();
  r.dim("Jordan-left with f(i) = f(j) = f(k) = 0", solve(h, JL, f_kills_ijk(h)), 0);
}

void quat_left_zero(const RingSpec&, Recorder& r) { r.dim("H", solve(quaternions(), LEFT), 0); }

// ---------------------------------------------------------------- examples

void ex_1_3(const RingSpec&, Recorder& r) {
  const RingSpec z4 = RingSpec::integers_mod(4);
  const AlgebraPtr a = ring_as_algebra(z4);
  const LinMap f = 2 * LinMap::identity(a);
  const MapTriple t(f, f, f);
  r.expect("Z/4 is not 2-torsion free", !two_torsion_free(z4));
  r.expect("Z/4 as an algebra is commutative", is_commutative(*a));
  const CheckReport jl = is_jordan_left_gh_derivation(t);
  r.expect("Jordan left {f,f}-derivation", jl.holds, report_text(a, jl));
  const CheckReport left = is_left_gh_derivation(t);
  const bool witness = !left.holds && left.counterexample->i == 0 && left.counterexample->j == 0 &&
                       left.counterexample->lhs == el(a, {2}) && left.counterexample->rhs == el(a, {4});
  r.expect("not a left {f,f}-derivation, f(1*1) = 2 vs 4 = 0", witness, report_text(a, left));
  bool refused = false;
  try {
    (void)solve(a, JL);
  } catch (const CompositeModulusUnsupported&) {
    refused = true;
  }
  r.expect("solver refuses Z/4", refused);
}

void ex_2_1(const RingSpec&, Recorder& r) {
  const AlgebraPtr t2 = upper_triangular(2);
  const AlgElement e11 = AlgElement::of(t2, {{"e11", 1}});
  const AlgElement e12 = AlgElement::of(t2, {{"e12", 1}});
  const AlgElement e22 = AlgElement::of(t2, {{"e22", 1}});
  const LinMap left_g = left_mul_map(e11);
  const MapTriple lt(LinMap::zero(t2), left_g, -1 * left_g);

  const CheckReport gh = is_gh_derivation(lt);
  r.expect("g = L_e11: 0 is not a {g,-g}-derivation", !gh.holds, report_text(t2, gh));
  const Evaluation w = evaluate(K::GHDerivation, lt, e12, e22, 0);
  r.expect("witness g(e12)e22 + e12(-g)(e22) = e12", w.lhs.is_zero() && w.rhs == e12, eval_text(w));

  // The left {g,-g} claim does not survive g = L_e11; it holds for g = R_e11.
  const CheckReport left_l = is_left_gh_derivation(lt);
  r.note("g = L_e11: 0 is a left {g,-g}-derivation", left_l.holds, report_text(t2, left_l));
  const LinMap right_g = right_mul_map(e11);
  const MapTriple rt(LinMap::zero(t2), right_g, -1 * right_g);
  const CheckReport left_r = is_left_gh_derivation(rt);
  r.expect("g = R_e11: 0 is a left {g,-g}-derivation", left_r.holds, report_text(t2, left_r));
  const CheckReport gh_r = is_gh_derivation(rt);
  r.expect("g = R_e11: 0 is not a {g,-g}-derivation", !gh_r.holds, report_text(t2, gh_r));
}

void ex_2_2(const RingSpec&, Recorder& r) {
  const AlgebraPtr t2 = upper_triangular(2);
  const AlgElement a = AlgElement::of(t2, {{"e11", 1}, {"e12", 1}, {"e22", 1}});
  const LinMap g = left_mul_map(a) - right_mul_map(a);
  const LinMap f = LinMap::identity(t2) + g;
  const MapTriple t(f, f, g);
  const CheckReport gh = is_gh_derivation(t);
  r.expect("f is an {f,g}-derivation", gh.holds, report_text(t2, gh));
  const CheckReport left = is_left_gh_derivation(t);
  r.expect("f is not a left {f,g}-derivation", !left.holds, report_text(t2, left));
  const AlgElement e11 = AlgElement::of(t2, {{"e11", 1}});
  const AlgElement e22 = AlgElement::of(t2, {{"e22", 1}});
  const Evaluation w = evaluate(LEFT, t, e11, e22, 0);
  r.expect("witness f(e11 e22) = 0 vs e11 f(e22) + e22 g(e11) = e12",
           w.lhs.is_zero() && w.rhs == AlgElement::of(t2, {{"e12", 1}}), eval_text(w));
  r.note("the right-hand side equals a", w.rhs == a, "a = " + show(a));
}

MapTriple example_2_3() {
  const auto g = ints(RingSpec::rationals(), {1, 2, 3});
  const auto h = ints(RingSpec::rationals(), {4, 5});
  return tn_jordan_family(upper_triangular(2), g, h);
}

void ex_2_3(const RingSpec&, Recorder& r) {
  const MapTriple t = example_2_3();
  const AlgebraPtr& t2 = t.algebra();
  // X = [[x1, x2], [0, x3]] in the basis (e11, e12, e22).
  const MapTriple stated(LinMap::from_images(t2, {el(t2, {5, 7, 0}), el(t2, {0, 6, 0}), el(t2, {0, 0, 6})}),
                         LinMap::from_images(t2, {el(t2, {1, 2, 0}), el(t2, {0, 3, 0}), el(t2, {0, 0, 3})}),
                         LinMap::from_images(t2, {el(t2, {4, 5, 0}), el(t2, {0, 3, 0}), el(t2, {0, 0, 3})}));
  r.expect("closed form with g = (1,2,3), h = (4,5) gives the stated maps", t == stated);
  const CheckReport jl = is_jordan_left_gh_derivation(t);
  r.expect("Jordan left {g,h}-derivation", jl.holds, report_text(t2, jl));
  const CheckReport left = is_left_gh_derivation(t);
  r.expect("not a left {g,h}-derivation", !left.holds, report_text(t2, left));
  const AlgElement e11 = AlgElement::of(t2, {{"e11", 1}});
  const AlgElement e12 = AlgElement::of(t2, {{"e12", 1}});
  const Evaluation w = evaluate(LEFT, t, e12, e11, 0);
  r.expect("witness f(e12 e11) = 0 vs e12 g(e11) + e11 h(e12) = 3e12", w.lhs.is_zero() && w.rhs == 3 * e12,
           eval_text(w));
  const AlgElement lhs = apply(t.f, jordan_product(e12, e11));
  const AlgElement rhs = jordan_product(apply(t.g, e12), e11) + jordan_product(e12, apply(t.h, e11));
  r.expect("f(e12 o e11) = 6e12 vs g(e12) o e11 + e12 o h(e11) = 7e12", lhs == 6 * e12 && rhs == 7 * e12,
           show(lhs) + " vs " + show(rhs));
}

void ex_2_5(const RingSpec&, Recorder& r) {
  const auto g = ints(RingSpec::rationals(), {1, 0});
  const auto h = ints(RingSpec::rationals(), {0, 1});
  const MapTriple t = tn_left_family(upper_triangular(2), g, h);
  const AlgebraPtr& t2 = t.algebra();
  const MapTriple stated(LinMap::from_images(t2, {el(t2, {1, 1, 0}), el(t2, {0, 0, 0}), el(t2, {0, 0, 0})}),
                         LinMap::from_images(t2, {el(t2, {1, 0, 0}), el(t2, {0, 0, 0}), el(t2, {0, 0, 0})}),
                         LinMap::from_images(t2, {el(t2, {0, 1, 0}), el(t2, {0, 0, 0}), el(t2, {0, 0, 0})}));
  r.expect("closed form with g = (1,0), h = (0,1) gives the stated maps", t == stated);
  const CheckReport left = is_left_gh_derivation(t);
  r.expect("left {g,h}-derivation", left.holds, report_text(t2, left));
  const CheckReport gh = is_gh_derivation(t);
  r.expect("not a {g,h}-derivation", !gh.holds, report_text(t2, gh));
  const AlgElement a = el(t2, {1, 0, 0});
  const AlgElement b = el(t2, {1, 1, 0});
  const Evaluation w = evaluate(K::GHDerivation, t, a, b, 0);
  r.expect("witness at (e11, e11 + e12): e11 + e12 vs e11 + 2e12",
           w.lhs == el(t2, {1, 1, 0}) && w.rhs == el(t2, {1, 2, 0}), eval_text(w));
}

void ex_2_7(const RingSpec&, Recorder& r) {
  const AlgebraPtr t2 = upper_triangular(2);
  const LinMap g = right_mul_map(el(t2, {1, 0, -1}));
  const LinMap h = right_mul_map(el(t2, {-1, 1, -1}));
  const LinMap f = g + h;
  const LinMap g_stated = LinMap::from_images(t2, {el(t2, {1, 0, 0}), el(t2, {0, -1, 0}), el(t2, {0, 0, -1})});
  const LinMap h_stated = LinMap::from_images(t2, {el(t2, {-1, 1, 0}), el(t2, {0, -1, 0}), el(t2, {0, 0, -1})});
  const LinMap f_stated = LinMap::from_images(t2, {el(t2, {0, 1, 0}), el(t2, {0, -2, 0}), el(t2, {0, 0, -2})});
  r.expect("right multiplications give the stated maps", g == g_stated && h == h_stated && f == f_stated);
  const MapTriple t(f, g, h);
  const CheckReport jl = is_jordan_left_gh_derivation(t);
  r.expect("Jordan left {g,h}-derivation", jl.holds, report_text(t2, jl));
  const AlgElement a = el(t2, {1, 2, 3});
  const AlgElement b = el(t2, {4, 5, 6});
  for (const auto& [name, m] : {std::pair{"g", &g}, std::pair{"h", &h}, std::pair{"f", &f}}) {
    const Evaluation e = evaluate(K::LeftCentralizer, single(*m), a, b);
    r.expect(std::string(name) + "(AB) != " + name + "(A)B", !(e.lhs == e.rhs), eval_text(e));
    r.expect(std::string(name) + " is a right centralizer", is_right_centralizer(*m).holds);
  }
}

void ex_2_9(const RingSpec&, Recorder& r) {
  const AlgebraPtr m2 = full_matrix(2);
  const AlgElement alpha = el(m2, {1, 2, 3, 4});
  const MapTriple t = mn_jordan_family(alpha);
  // X = [[x1, x2], [x3, x4]] in the basis (e11, e12, e21, e22).
  const LinMap g_stated = LinMap::from_images(
      m2, {el(m2, {1, 2, 0, 0}), el(m2, {3, 4, 0, 0}), el(m2, {0, 0, 1, 2}), el(m2, {0, 0, 3, 4})});
  r.expect("(2R_a, R_a, R_a) with a = [[1,2],[3,4]] gives the stated maps", t.g == g_stated && t.f == 2 * g_stated);
  const CheckReport jl = is_jordan_left_gh_derivation(t);
  r.expect("Jordan left {g,g}-derivation", jl.holds, report_text(m2, jl));
  const CheckReport left = is_left_gh_derivation(t);
  r.expect("not a left {g,g}-derivation", !left.holds, report_text(m2, left));
  const Evaluation w = evaluate(LEFT, t, AlgElement::of(m2, {{"e12", 1}}), AlgElement::of(m2, {{"e11", 1}}), 0);
  r.expect("witness f(e12 e11) = 0 vs e12 g(e11) + e11 g(e12) = 3e11 + 4e12",
           w.lhs.is_zero() && w.rhs == el(m2, {3, 4, 0, 0}), eval_text(w));
}

void ex_2_12(const RingSpec&, Recorder& r) {
  const AlgebraPtr m2 = full_matrix(2);
  // g(A) = [[a11 - a12, -a11], [a21 - a22, -a21]]
  const LinMap g = LinMap::from_images(
      m2, {el(m2, {1, -1, 0, 0}), el(m2, {-1, 0, 0, 0}), el(m2, {0, 0, 1, -1}), el(m2, {0, 0, -1, 0})});
  const auto alpha = recover_right_factor(g);
  r.expect("g(A) = A a with a = [[1,-1],[-1,0]]", alpha && *alpha == el(m2, {1, -1, -1, 0}),
           alpha ? "a = " + show(*alpha) : "no right factor");
  const MapTriple t(2 * g, g, g);
  const CheckReport jl = is_jordan_left_gh_derivation(t);
  r.expect("Jordan left {g,g}-derivation", jl.holds, report_text(m2, jl));
  const AlgElement a = el(m2, {1, 2, 3, 4});
  const AlgElement b = el(m2, {5, 6, 7, 8});
  const Evaluation eg = evaluate(K::LeftCentralizer, single(g), a, b);
  const Evaluation ef = evaluate(K::LeftCentralizer, single(t.f), a, b);
  r.expect("g(AB) != g(A)B", !(eg.lhs == eg.rhs), eval_text(eg));
  r.expect("f(AB) != f(A)B", !(ef.lhs == ef.rhs), eval_text(ef));
}

void ex_5_5(const RingSpec&, Recorder& r) {
  const AlgebraPtr h = quaternions();
  const LinMap g = LinMap::identity(h);
  const MapTriple t = quat_jordan_family(AlgElement::unity(h));
  r.expect("alpha = 1 gives f(q) = 2q, g(q) = q", t.f == 2 * g && t.g == g && t.h == g);
  const CheckReport jl = is_jordan_left_gh_derivation(t);
  r.expect("Jordan left {g,g}-derivation", jl.holds, report_text(h, jl));
  const CheckReport left = is_left_gh_derivation(t);
  r.expect("not a left {g,g}-derivation", !left.holds, report_text(h, left));
  const AlgElement i = AlgElement::basis(h, 1), j = AlgElement::basis(h, 2), k = AlgElement::basis(h, 3);
  const Evaluation w = evaluate(LEFT, t, i, j, 0);
  r.expect("witness f(ij) = f(k) = 2k vs i g(j) + j g(i) = 0", w.lhs == 2 * k && w.rhs.is_zero(), eval_text(w));
  r.expect("f(k) != 0, so the f(i) = f(j) = f(k) = 0 condition fails", !apply(t.f, k).is_zero());
}

void ex_5_8(const RingSpec&, Recorder& r) {
  const AlgebraPtr h = quaternions();
  const AlgElement alpha = el(h, {1, 2, 3, 4});
  const MapTriple t = quat_jordan_family(alpha);
  // g(q) = (a-2b-3c-4d) + (2a+b+4c-3d)i + (3a-4b+c+2d)j + (4a+3b-2c+d)k
  const LinMap g_stated = LinMap::from_images(
      h, {el(h, {1, 2, 3, 4}), el(h, {-2, 1, -4, 3}), el(h, {-3, 4, 1, -2}), el(h, {-4, -3, 2, 1})});
  r.expect("R_a with a = 1 + 2i + 3j + 4k gives the stated g", t.g == g_stated);
  const CheckReport jl = is_jordan_left_gh_derivation(t);
  r.expect("Jordan left {g,g}-derivation", jl.holds, report_text(h, jl));
  const AlgElement p = el(h, {5, 6, 7, 8});
  const AlgElement qq = el(h, {9, 10, 11, 12});
  const Evaluation eg = evaluate(K::LeftCentralizer, single(t.g), p, qq);
  const Evaluation ef = evaluate(K::LeftCentralizer, single(t.f), p, qq);
  r.expect("g(pq) != g(p)q", !(eg.lhs == eg.rhs), eval_text(eg));
  r.expect("f(pq) != f(p)q", !(ef.lhs == ef.rhs), eval_text(ef));
  r.expect("g and f are right centralizers", is_right_centralizer(t.g).holds && is_right_centralizer(t.f).holds);
}

// ---------------------------------------------------------------- lifts

void poly_lift_closure(const RingSpec&, Recorder& r) {
  std::mt19937_64 rng(4101);
  const std::vector<std::pair<std::string, AlgebraPtr>> algebras{
      {"T2", upper_triangular(2)}, {"M2", full_matrix(2)}, {"H", quaternions()}};
  for (const auto& [name, alg] : algebras) {
    const AlgebraPtr poly = truncated_poly(alg, 3);
    for (K kind : {JL, LEFT}) {
      const SolutionSpace s = solve(alg, kind);
      std::size_t passed = 0;
      for (int trial = 0; trial < 50; ++trial) {
        const MapTriple t = random_element(s, rng);
        const MapTriple lifted(poly_lift(t.f, poly), poly_lift(t.g, poly), poly_lift(t.h, poly));
        if (check(kind, lifted)) ++passed;
      }
      r.expect(name + " " + std::string(kind_name(kind)) + " lifted to degree 3", passed == 50,
               std::to_string(passed) + "/50 pass, space dim " + std::to_string(s.dim));
    }
  }
}

void tensor_extend_closure(const RingSpec&, Recorder& r) {
  const RingSpec ring;
  const AlgebraPtr s_poly = truncated_poly(ring_as_algebra(ring), 1, "t");
  const AlgebraPtr s_diag = diagonal(2, ring);
  const std::vector<std::pair<std::string, AlgebraPtr>> bases{
      {"Q", ring_as_algebra(ring)}, {"Q[s]/(s^2)", truncated_poly(ring_as_algebra(ring), 1, "s")}, {"T2", upper_triangular(2)}};
  for (const auto& [name, a] : bases) {
    for (const auto& [sname, s] : {std::pair{std::string("Q[t]/(t^2)"), s_poly}, std::pair{std::string("Q^2"), s_diag}}) {
      const AlgebraPtr product = tensor_product(a, s);
      for (K kind : {JL, LEFT}) {
        const SolutionSpace base = solve(a, kind);
        bool ok = true;
        for (const auto& t : base.basis) {
          const MapTriple ext(tensor_extend_into(t.f, product), tensor_extend_into(t.g, product),
                              tensor_extend_into(t.h, product));
          ok = ok && check(kind, ext).holds;
        }
        r.expect(name + " (x) " + sname + " " + std::string(kind_name(kind)) + " extends", ok);
      }
    }
  }
}

void tensor_equality(const RingSpec&, Recorder& r) {
  const RingSpec ring;
  const AlgebraPtr s = truncated_poly(ring_as_algebra(ring), 1, "t");
  const std::vector<std::pair<std::string, AlgebraPtr>> bases{
      {"Q", ring_as_algebra(ring)}, {"Q[s]/(s^2)", truncated_poly(ring_as_algebra(ring), 1, "s")}};
  for (const auto& [name, a] : bases) {
    for (const auto& [label, alg] : {std::pair{name, a}, std::pair{name + " (x) Q[t]/(t^2)", tensor_product(a, s)}}) {
      const SolutionSpace jl = solve(alg, JL);
      const SolutionSpace left = solve(alg, LEFT);
      r.expect(label + ": Jordan-left space equals left space", space_equal(jl, left),
               "dims " + std::to_string(jl.dim) + " and " + std::to_string(left.dim));
    }
  }
}

void tensor_coordinates_entry(const RingSpec&, Recorder& r) {
  std::mt19937_64 rng(3101);
  const RingSpec ring;
  const AlgebraPtr t2 = upper_triangular(2);
  const AlgebraPtr s = truncated_poly(ring_as_algebra(ring), 1, "s");
  const AlgebraPtr product = tensor_product(t2, s);
  const std::size_t d = product->dim();

  bool round_trip = true;
  bool pure_tensors = true;
  for (int trial = 0; trial < 10; ++trial) {
    const LinMap f(t2, random_scalars(t2->dim() * t2->dim(), ring, rng));
    const auto coords = tensor_coordinates(tensor_extend_into(f, product));
    round_trip = round_trip && coords.size() == 2 && coords[0] == f && coords[1] == LinMap::zero(t2);

    const LinMap g(product, random_scalars(d * d, ring, rng));
    const LinMap back = tensor_reassemble(tensor_coordinates(g), product);
    for (std::size_t i = 0; i < t2->dim(); ++i) pure_tensors = pure_tensors && back.image(i * 2) == g.image(i * 2);
  }
  r.expect("coordinates of F (x) id are (F, 0)", round_trip);
  r.expect("reassembled random maps agree on every e_i (x) 1", pure_tensors);

  // Reassembled maps commute with right multiplication by 1 (x) s.
  bool exact = true;
  std::vector<Scalar> one_s(d, Scalar::zero(ring));
  for (std::size_t i = 0; i < t2->dim(); ++i) one_s[i * 2 + 1] = t2->unity()[i];
  const LinMap rs = right_mul_map(AlgElement(product, std::move(one_s)));
  for (int trial = 0; trial < 5; ++trial) {
    const LinMap f0(t2, random_scalars(t2->dim() * t2->dim(), ring, rng));
    const LinMap f1(t2, random_scalars(t2->dim() * t2->dim(), ring, rng));
    const std::vector<LinMap> coords{f0, f1};
    const LinMap g = tensor_reassemble(coords, product);
    const auto again = tensor_coordinates(g);
    exact = exact && again.size() == 2 && again[0] == f0 && again[1] == f1 && compose(g, rs) == compose(rs, g);
  }
  r.expect("coordinates of a reassembled map are the inputs", exact);
}

// ---------------------------------------------------------------- decomposition and audit

void decompose_entry(const RingSpec&, Recorder& r) {
  std::mt19937_64 rng(1501);
  std::size_t central = 0, total = 0;
  bool implication = true;
  bool identity = true;
  const std::vector<AlgebraPtr> algebras{ring_as_algebra(), diagonal(2), truncated_poly(ring_as_algebra(), 2),
                                         upper_triangular(2), upper_triangular(3)};
  for (const auto& alg : algebras) {
    const SolutionSpace s = solve(alg, LEFT);
    for (int trial = 0; trial < 20; ++trial) {
      const MapTriple t = random_element(s, rng);
      const LeftGHDecomposition dec = decompose_left_gh(t);
      ++total;
      identity = identity && dec.d + left_mul_map(dec.lambda) == t.f;
      if (dec.lambda_central) {
        ++central;
        implication = implication && dec.d_left_derivation.holds;
      }
    }
  }
  r.expect("f = L_lambda + d", identity);
  r.expect("lambda central implies d is a left derivation", implication,
           std::to_string(central) + " of " + std::to_string(total) + " samples have central lambda");

  const auto g = ints(RingSpec::rationals(), {1, 0});
  const auto h = ints(RingSpec::rationals(), {0, 1});
  const MapTriple ex = tn_left_family(upper_triangular(2), g, h);
  const LeftGHDecomposition dec = decompose_left_gh(ex);
  r.expect("left {g,h} family member with g = (1,0), h = (0,1): lambda = e11 + e12, not central",
           dec.lambda == el(ex.algebra(), {1, 1, 0}) && !dec.lambda_central, "lambda = " + show(dec.lambda));
  r.note("its d is a left derivation", dec.d_left_derivation.holds, report_text(ex.algebra(), dec.d_left_derivation));
}

void audit_entry(const RingSpec&, Recorder& r) {
  const MapTriple ex = example_2_3();
  const CheckReport a = audit_remark_14(ex);
  r.note("T2 triple g = (1,2,3), h = (4,5): (f, g+h, g+h) left check", a.holds, report_text(ex.algebra(), a));
  const AlgElement e11 = AlgElement::of(ex.algebra(), {{"e11", 1}});
  const AlgElement e12 = AlgElement::of(ex.algebra(), {{"e12", 1}});
  const LinMap s = ex.g + ex.h;
  const Evaluation w = evaluate(LEFT, MapTriple(ex.f, s, s), e12, e11, 0);
  r.note("same triple at (e12, e11)", w.lhs == w.rhs, eval_text(w));

  std::size_t fails = 0;
  const SolutionSpace t2 = solve(upper_triangular(2), JL);
  for (const auto& t : t2.basis) fails += audit_remark_14(t).holds ? 0 : 1;
  r.note("T2 Jordan-left basis triples passing", fails == 0,
         std::to_string(t2.dim - fails) + " of " + std::to_string(t2.dim));
  const SolutionSpace q = solve(ring_as_algebra(), JL);
  bool comm = true;
  for (const auto& t : q.basis) comm = comm && audit_remark_14(t).holds;
  r.note("Q as an algebra: every basis triple passes", comm);
  r.note("zero triple passes", audit_remark_14(MapTriple::zero(ex.algebra())).holds);

  // (f, (g+h)/2, (g+h)/2) instead.
  const Scalar half = Scalar::rational(1, 2);
  auto halved = [&](const MapTriple& t) {
    const LinMap m = half * (t.g + t.h);
    return is_left_gh_derivation(MapTriple(t.f, m, m)).holds;
  };
  bool halved_q = true;
  for (const auto& t : q.basis) halved_q = halved_q && halved(t);
  r.note("Q as an algebra: halved variant passes on every basis triple", halved_q);
  r.note("T2 triple g = (1,2,3), h = (4,5): halved variant passes", halved(ex));
}

// ---------------------------------------------------------------- properties

std::vector<std::pair<std::string, AlgebraPtr>> property_algebras(const RingSpec& ring) {
  std::vector<std::pair<std::string, AlgebraPtr>> out;
  for (const char* e : {"ring", "diag2", "diag3", "poly:1:ring", "poly:2:ring", "tn2", "tn3", "mn2",
                        "poly:1:tn2", "tensor:poly:1:ring,poly:1:ring", "tensor:tn2,diag2"}) {
    out.emplace_back(e, parse_algebra(e, ring));
  }
  if (ring.is_rationals()) out.emplace_back("quat", quaternions());
  return out;
}

void left_in_jordan(const RingSpec& ring, Recorder& r) {
  for (const auto& [name, alg] : property_algebras(ring)) {
    const SolutionSpace jl = solve(alg, JL);
    const SolutionSpace left = solve(alg, LEFT);
    r.expect(name + ": left space inside Jordan-left space",
             space_contains(jl, left) && verify_space(jl).ok() && verify_space(left).ok(),
             "dims " + std::to_string(left.dim) + " <= " + std::to_string(jl.dim));
  }
}

void commutative_equality(const RingSpec& ring, Recorder& r) {
  for (const auto& [name, alg] : property_algebras(ring)) {
    if (!is_commutative(*alg)) continue;
    const SolutionSpace jl = solve(alg, JL);
    const SolutionSpace left = solve(alg, LEFT);
    r.expect(name + ": Jordan-left space equals left space", space_equal(jl, left),
             "dims " + std::to_string(jl.dim) + " and " + std::to_string(left.dim));
  }
}

void cross_ring(const RingSpec&, Recorder& r) {
  const RingSpec z5 = RingSpec::integers_mod(5);
  r.dim("T2 Jordan-left over Z/5", solve(upper_triangular(2, z5), JL), 5);
  r.dim("T3 Jordan-left over Z/5", solve(upper_triangular(3, z5), JL), 9);
  r.dim("M2 Jordan-left over Z/5", solve(full_matrix(2, z5), JL), 4);
  r.dim("T2 left over Z/5", solve(upper_triangular(2, z5), LEFT), 4);
  r.dim("T3 left over Z/5", solve(upper_triangular(3, z5), LEFT), 6);
  r.dim("M2 left over Z/5", solve(full_matrix(2, z5), LEFT), 0);
}

std::vector<CatalogEntry> build_catalog() {
  using O = Origin;
  std::vector<CatalogEntry> c;
  auto add = [&](std::string id, std::string title, std::string anchor, O origin, bool generic,
                 std::function<void(const RingSpec&, Recorder&)> run, bool asserted = true) {
    c.push_back({std::move(id), std::move(title), std::move(anchor), origin, asserted, generic, std::move(run)});
  };

  add("thm-tn-jordan-dim", "Jordan left {g,h}-derivations of T_n, n = 2..4", "dim JL(T_n) = n(n+3)/2", O::Stated, true, tn_jordan_dim);
  add("thm-tn-jordan-family", "closed form of the T_n Jordan-left family", "g(A) = sum_{i<=j} (sum_k a_ik g_kj) e_ij, f = g + h", O::Stated, true, tn_jordan_family_entry);
  add("thm-tn-f-determined", "f is fixed by g and h on T_n", "f = g + h on T_n", O::Stated, true, tn_f_determined);
  add("cor-tn-right-centralizers", "T_n Jordan-left maps are right centralizers", "f, g, h right centralizers on T_n", O::Stated, true, tn_right_centralizers);
  add("thm-tn-left-dim", "left {g,h}-derivations of T_n, n = 2..4", "dim L(T_n) = 2n", O::Stated, true, tn_left_dim);
  add("thm-tn-left-family", "closed form of the T_n left family", "g(A) = a_11 sum_i g_1i e_1i", O::Stated, true, tn_left_family_entry);

  add("thm-mn-jordan-dim", "Jordan left {g,h}-derivations of M_n, n = 2, 3", "dim JL(M_n) = n^2", O::Stated, true, mn_jordan_dim);
  add("thm-mn-gh-collapse", "Jordan-left triples on M_n have g = h", "JL(M_n) forces g = h", O::Stated, true, mn_gh_collapse);
  add("thm-mn-jordan-family", "closed form of the M_n Jordan-left family", "g(A) = A alpha, f(A) = 2A alpha", O::Stated, true, mn_jordan_family_entry);
  add("thm-mn-f-determined", "f is fixed by g on M_n", "f = 2g on M_n", O::Stated, true, mn_f_determined);
  add("cor-mn-right-centralizers", "M_n Jordan-left maps are right centralizers", "f, g right centralizers on M_n", O::Stated, true, mn_right_centralizers);
  add("thm-mn-left-gg-zero", "left {g,g}-derivations of M_n vanish", "left {g,g} on M_n iff f = g = 0", O::Stated, true, mn_left_gg_zero);
  add("der-mn-left-zero", "left {g,h}-derivations of M_n vanish", "dim L(M_n) = 0", O::Derived, true, mn_left_zero);

  add("thm-quat-jordan-dim", "Jordan left {g,h}-derivations of H", "dim JL(H) = 4", O::Stated, false, quat_jordan_dim);
  add("thm-quat-gh-collapse", "Jordan-left triples on H have g = h", "JL(H) forces g = h", O::Stated, false, quat_gh_collapse);
  add("thm-quat-jordan-family", "closed form of the H Jordan-left family", "g(q) = q alpha, f(q) = 2q alpha", O::Stated, false, quat_jordan_family_entry);
  add("thm-quat-f-determined", "f is fixed by g on H", "f = 2g on H", O::Stated, false, quat_f_determined);
  add("cor-quat-right-centralizers", "H Jordan-left maps are right centralizers", "f, g right centralizers on H", O::Stated, false, quat_right_centralizers);
  add("thm-quat-left-gg-zero", "left {g,g}-derivations of H vanish", "left {g,g} on H forces f = g = 0", O::Stated, false, quat_left_gg_zero);
  add("thm-quat-left-criterion", "Jordan-left on H is left exactly when f kills i, j, k", "JL(H) is left iff f(i) = f(j) = f(k) = 0", O::Stated, false, quat_left_criterion);
  add("der-quat-jordan-criterion", "f(i) = f(j) = f(k) = 0 forces the zero Jordan-left triple", "JL(H) with f(i) = f(j) = f(k) = 0 is zero", O::Derived, false, quat_jordan_criterion);
  add("der-quat-left-zero", "left {g,h}-derivations of H vanish", "dim L(H) = 0", O::Derived, false, quat_left_zero);

  add("ex-1.3", "Z/4: Jordan-left without left", "Z/4: f = 2 id, f(1*1) = 2 vs 4", O::Stated, false, ex_1_3);
  add("ex-2.1", "T_2: 0 and {g,-g} with g(x) = e11 x", "T_2: g(e12)e22 + e12(-g)(e22) = e12", O::Stated, false, ex_2_1);
  add("ex-2.2", "T_2: an {f,g}-derivation that is not left", "T_2: g(x) = ax - xa, f = id + g", O::Stated, false, ex_2_2);
  add("ex-2.3", "T_2: Jordan-left without left", "T_2: e12 g(e11) + e11 h(e12) = 3e12", O::Stated, false, ex_2_3);
  add("ex-2.5", "T_2: left {g,h} that is not {g,h}", "T_2: f(X) = x1 e11 + x1 e12", O::Stated, false, ex_2_5);
  add("ex-2.7", "T_2: Jordan-left maps that are not left centralizers", "T_2: g(AB) != g(A)B for A = [[1,2],[0,3]], B = [[4,5],[0,6]]", O::Stated, false, ex_2_7);
  add("ex-2.9", "M_2: Jordan left {g,g} without left", "M_2: e12 g(e11) + e11 g(e12) = 3e11 + 4e12", O::Stated, false, ex_2_9);
  add("ex-2.12", "M_2: Jordan left {g,g} maps that are not left centralizers", "M_2: g(A) = [[a11 - a12, -a11], [a21 - a22, -a21]]", O::Stated, false, ex_2_12);
  add("ex-5.5", "H: Jordan left {g,g} without left", "H: f(ij) = f(k) = 2k vs 0", O::Stated, false, ex_5_5);
  add("ex-5.8", "H: Jordan left {g,g} maps that are not left centralizers", "H: g(q) = q(1 + 2i + 3j + 4k)", O::Stated, false, ex_5_8);

  add("lift-poly-closure", "lifts to A[x]/(x^4) keep the identity", "F~(sum a_t x^t) = sum F(a_t) x^t", O::Stated, false, poly_lift_closure);
  add("lift-tensor-extend", "F (x) id keeps the identity on A (x) S", "(F (x) id)(a (x) s) = F(a) (x) s", O::Derived, false, tensor_extend_closure);
  add("lift-tensor-equality", "Jordan-left equals left on commutative A and A (x) S", "JL(A) = L(A) implies JL(A (x) S) = L(A (x) S)", O::Stated, false, tensor_equality);
  add("lift-tensor-coordinates", "coordinate maps of maps on A (x) S", "F(u) = sum_t f_t(u) (x) b_t", O::Elementary, false, tensor_coordinates_entry);

  add("decompose-left-gh", "f = lambda a + d with lambda = g(1) + h(1)", "lambda = g(1) + h(1), d = f - L_lambda", O::Derived, false, decompose_entry);
  add("audit-sum-triple", "audit of (f, g+h, g+h) for Jordan-left triples", "JL triple => left {g+h, g+h}?", O::Derived, false, audit_entry, false);

  add("prop-left-in-jordan", "left spaces sit inside Jordan-left spaces", "L(A) subset of JL(A)", O::Elementary, true, left_in_jordan);
  add("prop-commutative-equality", "Jordan-left equals left on commutative algebras", "A commutative, 2-torsion free: JL(A) = L(A)", O::Stated, true, commutative_equality);
  add("prop-cross-ring-z5", "dimensions over Z/5", "dims over Z/5 match dims over Q", O::Derived, false, cross_ring);
  return c;
}

}  // namespace

std::string_view origin_name(Origin o) noexcept {
  switch (o) {
    case Origin::Stated:
      return "stated";
    case Origin::Derived:
      return "derived";
    case Origin::Elementary:
      return "elementary";
  }
  return "unknown";
}

std::string_view status_name(Status s) noexcept {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skip:
      return "skip";
    case Status::Reported:
      return "reported";
  }
  return "unknown";
}

void Recorder::expect(std::string name, bool ok, std::string detail) {
  lines_.push_back({std::move(name), ok, true, std::move(detail)});
}

void Recorder::note(std::string name, bool outcome, std::string detail) {
  lines_.push_back({std::move(name), outcome, false, std::move(detail)});
}

void Recorder::dim(std::string name, const SolutionSpace& space, std::size_t expected) {
  const SpaceVerification v = verify_space(space);
  std::string detail = dims_text(space.dim, expected);
  if (!v.ok()) {
    detail += "; verification:";
    if (!v.substitution) detail += " substitution";
    if (!v.rank_nullity) detail += " rank-nullity";
    if (!v.permutation) detail += " permutation";
    if (!v.canonical) detail += " canonical";
  }
  expect(std::move(name), space.dim == expected && v.ok(), std::move(detail));
}

std::vector<std::pair<std::string, MapTriple>> example_triples() {
  std::vector<std::pair<std::string, MapTriple>> out;
  const RingSpec qr;
  {
    const AlgebraPtr a = ring_as_algebra(RingSpec::integers_mod(4));
    const LinMap f = 2 * LinMap::identity(a);
    out.emplace_back("ex-1.3", MapTriple(f, f, f));
  }
  const AlgebraPtr t2 = upper_triangular(2);
  {
    const LinMap g = left_mul_map(AlgElement::of(t2, {{"e11", 1}}));
    out.emplace_back("ex-2.1", MapTriple(LinMap::zero(t2), g, -1 * g));
  }
  {
    const AlgElement a = AlgElement::of(t2, {{"e11", 1}, {"e12", 1}, {"e22", 1}});
    const LinMap g = left_mul_map(a) - right_mul_map(a);
    const LinMap f = LinMap::identity(t2) + g;
    out.emplace_back("ex-2.2", MapTriple(f, f, g));
  }
  out.emplace_back("ex-2.3", example_2_3());
  out.emplace_back("ex-2.5", tn_left_family(t2, ints(qr, {1, 0}), ints(qr, {0, 1})));
  {
    const LinMap g = right_mul_map(el(t2, {1, 0, -1}));
    const LinMap h = right_mul_map(el(t2, {-1, 1, -1}));
    out.emplace_back("ex-2.7", MapTriple(g + h, g, h));
  }
  const AlgebraPtr m2 = full_matrix(2);
  out.emplace_back("ex-2.9", mn_jordan_family(el(m2, {1, 2, 3, 4})));
  out.emplace_back("ex-2.12", mn_jordan_family(el(m2, {1, -1, -1, 0})));
  const AlgebraPtr h = quaternions();
  out.emplace_back("ex-5.5", quat_jordan_family(AlgElement::unity(h)));
  out.emplace_back("ex-5.8", quat_jordan_family(el(h, {1, 2, 3, 4})));
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

std::size_t RunReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [s](const EntryResult& r) { return r.status == s; }));
}

bool filter_matches(std::string_view filter, std::string_view id) {
  if (filter.empty()) return true;
  while (!filter.empty()) {
    const std::size_t comma = filter.find(',');
    std::string_view item = filter.substr(0, comma);
    filter = comma == std::string_view::npos ? std::string_view{} : filter.substr(comma + 1);
    if (item.empty()) continue;
    if (item.back() == '*') {
      if (id.starts_with(item.substr(0, item.size() - 1))) return true;
    } else if (item == id) {
      return true;
    }
  }
  return false;
}

RunReport run_catalog(std::string_view filter, const RingSpec& ring) {
  RunReport report{ring, {}};
  for (const auto& entry : catalog()) {
    if (!filter_matches(filter, entry.id)) continue;
    EntryResult res;
    res.entry = &entry;
    if (entry.ring_generic && !ring.is_field()) {
      res.status = Status::Skip;
      res.message = "needs a field, got " + ring.name();
    } else if (entry.ring_generic && !two_torsion_free(ring)) {
      res.status = Status::Skip;
      res.message = ring.name() + " is not 2-torsion free";
    } else {
      const auto start = std::chrono::steady_clock::now();
      Recorder rec;
      try {
        entry.run(ring, rec);
        res.checks = rec.take();
        const bool ok = std::all_of(res.checks.begin(), res.checks.end(),
                                    [](const CheckLine& l) { return !l.asserted || l.ok; });
        res.status = !entry.asserted ? Status::Reported : ok ? Status::Pass : Status::Fail;
      } catch (const std::exception& e) {
        res.checks = rec.take();
        res.status = entry.asserted ? Status::Fail : Status::Reported;
        res.message = std::string("exception: ") + e.what();
      }
      res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    report.results.push_back(std::move(res));
  }
  return report;
}

Json run_report_to_json(const RunReport& report, bool timings) {
  Json entries = Json::array();
  for (const auto& r : report.results) {
    Json checks = Json::array();
    for (const auto& l : r.checks) {
      checks.push_back(Json{{"name", l.name}, {"ok", l.ok}, {"asserted", l.asserted}, {"detail", l.detail}});
    }
    Json e{{"id", r.entry->id},
           {"title", r.entry->title},
           {"anchor", r.entry->anchor},
           {"origin", origin_name(r.entry->origin)},
           {"status", status_name(r.status)},
           {"message", r.message},
           {"checks", std::move(checks)}};
    if (timings) e["millis"] = r.millis;
    entries.push_back(std::move(e));
  }
  return Json{{"ring", ring_to_json(report.ring)},
              {"entries", std::move(entries)},
              {"passed", report.count(Status::Pass)},
              {"failed", report.count(Status::Fail)},
              {"skipped", report.count(Status::Skip)},
              {"reported", report.count(Status::Reported)},
              {"ok", report.ok()}};
}

std::string traceability_markdown(const RunReport& report) {
  std::ostringstream out;
  out << "# Traceability\n\n"
      << "Generated by `derivlab verify-paper --trace` over " << report.ring.name() << ".\n\n"
      << "| entry | anchor | origin | outcome |\n"
      << "|---|---|---|---|\n";
  for (const auto& r : report.results) {
    out << "| `" << r.entry->id << "` | " << r.entry->anchor << " | " << origin_name(r.entry->origin) << " | "
        << status_name(r.status) << " |\n";
  }
  out << "\n## Details\n";
  for (const auto& r : report.results) {
    out << "\n### " << r.entry->id << "\n\n" << r.entry->title << ". Outcome: " << status_name(r.status) << ".\n";
    if (!r.message.empty()) out << "\n" << r.message << "\n";
    if (!r.checks.empty()) out << "\n";
    for (const auto& l : r.checks) {
      out << "- " << (l.asserted ? (l.ok ? "[ok] " : "[FAILED] ") : (l.ok ? "[noted: true] " : "[noted: false] "))
          << l.name;
      if (!l.detail.empty()) out << " (" << l.detail << ")";
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace derivlab::cli
