#include <gtest/gtest.h>

#include <random>
#include <tuple>

#include "derivlab/errors.hpp"
#include "derivlab/solver.hpp"
#include "oracle.hpp"

using namespace derivlab;

namespace {

const RingSpec Q;

std::vector<Scalar> ints(std::initializer_list<long long> xs) {
  std::vector<Scalar> out;
  for (long long x : xs) out.push_back(Scalar::from_int(Q, x));
  return out;
}

AlgElement el(const AlgebraPtr& a, std::initializer_list<long long> xs) {
  std::vector<Scalar> c;
  for (long long x : xs) c.push_back(Scalar::from_int(a->ring(), x));
  return AlgElement(a, c);
}

AlgElement unit(const AlgebraPtr& a, const char* label) { return AlgElement::of(a, {{label, 1}}); }

LinMap inner(const AlgElement& a) { return left_mul_map(a) - right_mul_map(a); }

MapTriple example_2_3() { return tn_jordan_family(upper_triangular(2), ints({1, 2, 3}), ints({4, 5})); }

MapTriple random_in(const SolutionSpace& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-5, 5);
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < s.dim; ++i) c.push_back(Scalar::from_int(s.alg->ring(), dist(rng)));
  return combine(s, c);
}

AlgebraPtr s_dual() { return truncated_poly(ring_as_algebra(Q), 1, "s"); }

}  // namespace

TEST(Kinds, NamesRoundTrip) {
  for (IdentityKind k : kAllKinds) EXPECT_EQ(parse_kind(kind_name(k)), k);
  EXPECT_EQ(kind_name(IdentityKind::JordanLeftGHDerivation), "jordan-left-gh");
  EXPECT_THROW(parse_kind("jordan"), ParseError);
  EXPECT_EQ(equation_count(IdentityKind::LeftGHDerivation), 2u);
  EXPECT_EQ(equation_count(IdentityKind::JordanLeftGHDerivation), 1u);
  EXPECT_TRUE(single_map_kind(IdentityKind::RightCentralizer));
  EXPECT_FALSE(single_map_kind(IdentityKind::GHDerivation));
}

TEST(Derivation, Examples) {
  const AlgebraPtr m2 = full_matrix(2);
  EXPECT_TRUE(is_derivation(LinMap::zero(m2)));
  EXPECT_TRUE(is_derivation(inner(unit(m2, "e12"))));
  const CheckReport r = is_derivation(LinMap::identity(m2));
  ASSERT_FALSE(r.holds);
  ASSERT_TRUE(r.counterexample);
  EXPECT_EQ(r.counterexample->i, 0u);
  EXPECT_EQ(r.counterexample->j, 0u);
  EXPECT_EQ(r.counterexample->lhs, unit(m2, "e11"));
  EXPECT_EQ(r.counterexample->rhs, 2 * unit(m2, "e11"));
}

TEST(JordanDerivation, Examples) {
  const AlgebraPtr m2 = full_matrix(2);
  std::mt19937_64 rng(3);
  for (const AlgebraPtr& a : {m2, upper_triangular(3), quaternions()}) {
    for (int it = 0; it < 5; ++it) {
      const AlgElement x(a, oracle::random_triple(a, rng).f.image(0).coords());
      ASSERT_TRUE(is_derivation(inner(x)));
      EXPECT_TRUE(is_jordan_derivation(inner(x)));
    }
    EXPECT_TRUE(is_jordan_derivation(LinMap::zero(a)));
  }
  EXPECT_FALSE(is_jordan_derivation(LinMap::identity(m2)));
}

TEST(LeftDerivation, Examples) {
  const AlgebraPtr m2 = full_matrix(2);
  EXPECT_TRUE(is_left_derivation(LinMap::zero(m2)));
  EXPECT_FALSE(is_left_derivation(LinMap::identity(m2)));
  const AlgebraPtr r = ring_as_algebra(Q);
  for (long long c = -3; c <= 3; ++c) EXPECT_EQ(is_left_derivation(c * LinMap::identity(r)).holds, c == 0) << c;
}

TEST(GHDerivation, Examples) {
  const AlgebraPtr t2 = upper_triangular(2);
  const LinMap g = inner(el(t2, {1, 1, 1}));
  const LinMap f = LinMap::identity(t2) + g;
  EXPECT_TRUE(is_gh_derivation(MapTriple(f, f, g)));
  const LinMap g21 = left_mul_map(unit(t2, "e11"));
  const MapTriple ex21(LinMap::zero(t2), g21, -1 * g21);
  const CheckReport r = is_gh_derivation(ex21);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.counterexample->i, 1u);
  EXPECT_EQ(r.counterexample->j, 2u);
  EXPECT_EQ(r.counterexample->rhs, unit(t2, "e12"));
  const Evaluation ev = evaluate(IdentityKind::GHDerivation, ex21, unit(t2, "e12"), unit(t2, "e22"));
  EXPECT_TRUE(ev.lhs.is_zero());
  EXPECT_EQ(ev.rhs, unit(t2, "e12"));
  EXPECT_TRUE(is_gh_derivation(MapTriple::zero(t2)));
}

TEST(LeftGHDerivation, Examples) {
  const AlgebraPtr t2 = upper_triangular(2);
  EXPECT_TRUE(is_left_gh_derivation(tn_left_family(t2, ints({1, 0}), ints({0, 1}))));
  const MapTriple ex23 = example_2_3();
  const CheckReport r = is_left_gh_derivation(ex23);
  ASSERT_FALSE(r.holds);
  // The lexicographically first failure precedes the quoted witness pair.
  EXPECT_EQ(r.counterexample->i, 0u);
  EXPECT_EQ(r.counterexample->j, 1u);
  const Evaluation ev = evaluate(IdentityKind::LeftGHDerivation, ex23, unit(t2, "e12"), unit(t2, "e11"));
  EXPECT_TRUE(ev.lhs.is_zero());
  EXPECT_EQ(ev.rhs, 3 * unit(t2, "e12"));
  EXPECT_TRUE(is_left_gh_derivation(MapTriple::zero(t2)));
}

TEST(JordanLeftGH, Examples) {
  EXPECT_TRUE(is_jordan_left_gh_derivation(example_2_3()));

  const RingSpec z4 = RingSpec::integers_mod(4);
  const AlgebraPtr a = ring_as_algebra(z4);
  const LinMap two = 2 * LinMap::identity(a);
  const MapTriple ex13(two, two, two);
  EXPECT_TRUE(is_jordan_left_gh_derivation(ex13));
  const CheckReport left = is_left_gh_derivation(ex13);
  ASSERT_FALSE(left.holds);
  EXPECT_EQ(left.counterexample->i, 0u);
  EXPECT_EQ(left.counterexample->j, 0u);
  EXPECT_EQ(left.counterexample->lhs, el(a, {2}));
  EXPECT_EQ(left.counterexample->rhs, el(a, {4}));

  const AlgebraPtr m2 = full_matrix(2);
  const MapTriple ex29 = mn_jordan_family(el(m2, {1, 2, 3, 4}));
  EXPECT_TRUE(is_jordan_left_gh_derivation(ex29));
  EXPECT_FALSE(is_left_gh_derivation(ex29));
  const Evaluation ev = evaluate(IdentityKind::LeftGHDerivation, ex29, unit(m2, "e12"), unit(m2, "e11"));
  EXPECT_TRUE(ev.lhs.is_zero());
  EXPECT_EQ(ev.rhs, el(m2, {3, 4, 0, 0}));
}

TEST(Centralizers, Examples) {
  std::mt19937_64 rng(13);
  for (const AlgebraPtr& a : {upper_triangular(3), full_matrix(2), quaternions()}) {
    for (int it = 0; it < 5; ++it) {
      const AlgElement x(a, oracle::random_triple(a, rng).g.image(1).coords());
      EXPECT_TRUE(is_right_centralizer(right_mul_map(x)));
      EXPECT_TRUE(is_left_centralizer(left_mul_map(x)));
    }
  }
  const AlgebraPtr t2 = upper_triangular(2);
  const LinMap g27 = right_mul_map(el(t2, {1, 0, -1}));
  EXPECT_FALSE(is_left_centralizer(g27));
  const AlgebraPtr h = quaternions();
  const MapTriple ex58 = quat_jordan_family(el(h, {1, 2, 3, 4}));
  EXPECT_TRUE(is_right_centralizer(ex58.g));
  EXPECT_FALSE(is_left_centralizer(ex58.g));
}

TEST(Properties, LeftImpliesJordanLeft) {
  std::mt19937_64 rng(41);
  const std::vector<AlgebraPtr> algebras{upper_triangular(2), upper_triangular(3), full_matrix(2), quaternions(),
                                         ring_as_algebra(Q),  diagonal(2),         s_dual(),
                                         ring_as_algebra(RingSpec::integers_mod(4))};
  for (const auto& a : algebras) {
    std::vector<MapTriple> pool;
    for (int it = 0; it < 20; ++it) pool.push_back(oracle::random_triple(a, rng));
    if (a->ring().is_field()) {
      const SolutionSpace left = solve(a, IdentityKind::LeftGHDerivation);
      for (int it = 0; it < 20; ++it) pool.push_back(random_in(left, rng));
    }
    pool.push_back(MapTriple::zero(a));
    for (const auto& t : pool) {
      if (is_left_gh_derivation(t)) {
        EXPECT_TRUE(is_jordan_left_gh_derivation(t));
      }
    }
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int it = 0; it < 5; ++it) {
      std::uniform_int_distribution<int> dist(-4, 4);
      std::vector<Scalar> g, h;
      for (std::size_t k = 0; k < n; ++k) {
        g.push_back(Scalar::from_int(Q, dist(rng)));
        h.push_back(Scalar::from_int(Q, dist(rng)));
      }
      EXPECT_TRUE(is_jordan_left_gh_derivation(tn_left_family(n, g, h)));
    }
  }
}

TEST(Properties, CommutativeTorsionFreeEquality) {
  std::mt19937_64 rng(43);
  const RingSpec z5 = RingSpec::integers_mod(5);
  const std::vector<AlgebraPtr> algebras{ring_as_algebra(Q), diagonal(2),        s_dual(), truncated_poly(ring_as_algebra(Q), 2),
                                         ring_as_algebra(z5), diagonal(2, z5), tensor_product(s_dual(), diagonal(2))};
  for (const auto& a : algebras) {
    ASSERT_TRUE(is_commutative(*a));
    ASSERT_TRUE(two_torsion_free(a->ring()));
    const SolutionSpace jl = solve(a, IdentityKind::JordanLeftGHDerivation);
    std::vector<MapTriple> pool;
    for (int it = 0; it < 15; ++it) pool.push_back(oracle::random_triple(a, rng));
    for (int it = 0; it < 15; ++it) pool.push_back(random_in(jl, rng));
    for (int it = 0; it < 10; ++it) {
      MapTriple t = random_in(jl, rng);
      t.g += LinMap::identity(a);
      pool.push_back(t);
    }
    for (const auto& t : pool) {
      EXPECT_EQ(is_jordan_left_gh_derivation(t).holds, is_left_gh_derivation(t).holds);
    }
  }
}

TEST(Properties, IdempotentRule) {
  std::mt19937_64 rng(47);
  for (const AlgebraPtr& a : {upper_triangular(2), upper_triangular(3), full_matrix(2), quaternions(), diagonal(3)}) {
    const SolutionSpace jl = solve(a, IdentityKind::JordanLeftGHDerivation);
    for (int it = 0; it < 10; ++it) {
      const MapTriple t = random_in(jl, rng);
      ASSERT_TRUE(is_jordan_left_gh_derivation(t));
      for (std::size_t i = 0; i < a->dim(); ++i) {
        const AlgElement e = AlgElement::basis(a, i);
        if (!(multiply(e, e) == e)) continue;
        EXPECT_EQ(apply(t.f, multiply(e, e)), multiply(e, apply(t.g + t.h, e)));
      }
    }
  }
}

TEST(Properties, CounterexamplesReverifyAndAreFirst) {
  std::mt19937_64 rng(53);
  for (const AlgebraPtr& a : {upper_triangular(2), full_matrix(2), quaternions(), ring_as_algebra(RingSpec::integers_mod(4))}) {
    for (IdentityKind kind : kAllKinds) {
      for (int it = 0; it < 4; ++it) {
        const MapTriple t = oracle::random_triple(a, rng, 2);
        const CheckReport r = check(kind, t);
        EXPECT_EQ(r.holds, !r.counterexample.has_value());
        if (r.holds) continue;
        const Counterexample& c = *r.counterexample;
        EXPECT_FALSE(c.lhs == c.rhs);
        EXPECT_TRUE(reverify(kind, t, c));
        // Nothing fails strictly before the reported position.
        for (std::size_t i = 0; i < a->dim(); ++i) {
          for (std::size_t j = 0; j < a->dim(); ++j) {
            for (std::size_t eq = 0; eq < equation_count(kind); ++eq) {
              if (std::tie(i, j, eq) >= std::tie(c.i, c.j, c.equation)) continue;
              const Evaluation ev = evaluate(kind, t, AlgElement::basis(a, i), AlgElement::basis(a, j), eq);
              EXPECT_EQ(ev.lhs, ev.rhs);
            }
          }
        }
        Counterexample forged = c;
        forged.rhs = forged.lhs;
        EXPECT_FALSE(reverify(kind, t, forged));
      }
    }
  }
}

TEST(Decompose, Examples) {
  const AlgebraPtr r = ring_as_algebra(Q);
  for (long long c : {1, -3, 5}) {
    const LinMap g = c * LinMap::identity(r);
    const LeftGHDecomposition d = decompose_left_gh(MapTriple(2 * g, g, g));
    EXPECT_EQ(d.lambda, el(r, {2 * c}));
    EXPECT_TRUE(d.lambda_central);
    EXPECT_EQ(d.d, LinMap::zero(r));
    EXPECT_TRUE(d.d_left_derivation);
  }
  const AlgebraPtr t2 = upper_triangular(2);
  const MapTriple ex25 = tn_left_family(t2, ints({1, 0}), ints({0, 1}));
  const LeftGHDecomposition d = decompose_left_gh(ex25);
  EXPECT_EQ(d.lambda, el(t2, {1, 1, 0}));
  EXPECT_FALSE(d.lambda_central);
  EXPECT_EQ(d.d, ex25.f - left_mul_map(d.lambda));
  EXPECT_EQ(d.d_left_derivation.holds, is_left_derivation(d.d).holds);

  const LeftGHDecomposition z = decompose_left_gh(MapTriple::zero(t2));
  EXPECT_TRUE(z.lambda.is_zero());
  EXPECT_TRUE(z.lambda_central);
  EXPECT_EQ(z.d, LinMap::zero(t2));
  EXPECT_TRUE(z.d_left_derivation);
  EXPECT_THROW(decompose_left_gh(example_2_3()), PreconditionFailed);
}

TEST(Audit, ComputedOutcomes) {
  const AlgebraPtr t2 = upper_triangular(2);
  EXPECT_TRUE(audit_remark_14(MapTriple::zero(t2)));

  const MapTriple ex23 = example_2_3();
  const CheckReport r = audit_remark_14(ex23);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.counterexample->i, 0u);
  EXPECT_EQ(r.counterexample->j, 0u);
  EXPECT_EQ(r.counterexample->lhs, el(t2, {5, 7, 0}));
  EXPECT_EQ(r.counterexample->rhs, el(t2, {10, 14, 0}));
  const MapTriple summed(ex23.f, ex23.g + ex23.h, ex23.g + ex23.h);
  const Evaluation ev = evaluate(IdentityKind::LeftGHDerivation, summed, unit(t2, "e12"), unit(t2, "e11"));
  EXPECT_TRUE(ev.lhs.is_zero());
  EXPECT_EQ(ev.rhs, 6 * unit(t2, "e12"));

  // On Q every nonzero Jordan-left triple has f = g + h, and the summed triple fails at (1, 1).
  const AlgebraPtr q = ring_as_algebra(Q);
  const LinMap id = LinMap::identity(q);
  const MapTriple one(2 * id, id, id);
  ASSERT_TRUE(is_jordan_left_gh_derivation(one));
  EXPECT_FALSE(audit_remark_14(one));
  const MapTriple halved(one.f, Scalar::rational(1, 2) * (one.g + one.h), Scalar::rational(1, 2) * (one.g + one.h));
  EXPECT_TRUE(is_left_gh_derivation(halved));
  EXPECT_THROW(audit_remark_14(MapTriple(id, id, id)), PreconditionFailed);
}
