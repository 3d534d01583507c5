#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "derivlab/errors.hpp"
#include "derivlab/linalg.hpp"
#include "oracle.hpp"

using namespace derivlab;
using namespace derivlab::linalg;

namespace {

Matrix ints(const RingSpec& ring, std::vector<std::vector<long long>> rows) {
  Matrix m;
  for (const auto& r : rows) {
    Vector v;
    for (long long x : r) v.push_back(Scalar::from_int(ring, x));
    m.push_back(std::move(v));
  }
  return m;
}

Vector times(const Matrix& m, const Vector& x, const RingSpec& ring) {
  Vector out;
  for (const auto& row : m) {
    Scalar s = Scalar::zero(ring);
    for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * x[j];
    out.push_back(s);
  }
  return out;
}

Matrix random_matrix(std::mt19937_64& rng, const RingSpec& ring, std::size_t r, std::size_t c, std::size_t rank_bound) {
  // Product of r x k and k x c integer matrices, so the rank is at most k.
  std::uniform_int_distribution<long long> dist(-3, 3);
  std::vector<std::vector<long long>> a(r, std::vector<long long>(rank_bound));
  std::vector<std::vector<long long>> b(rank_bound, std::vector<long long>(c));
  for (auto& row : a) for (auto& x : row) x = dist(rng);
  for (auto& row : b) for (auto& x : row) x = dist(rng);
  std::vector<std::vector<long long>> p(r, std::vector<long long>(c, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < rank_bound; ++k)
      for (std::size_t j = 0; j < c; ++j) p[i][j] += a[i][k] * b[k][j];
  return ints(ring, p);
}

std::size_t reference_rank(const Matrix& m, const RingSpec& ring) {
  if (ring.is_rationals()) {
    std::vector<std::vector<mpz_class>> z;
    for (const auto& row : m) {
      std::vector<mpz_class> zr;
      for (const auto& x : row) zr.push_back(mpz_class(x.rational_value()));
      z.push_back(std::move(zr));
    }
    return oracle::bareiss_rank(std::move(z));
  }
  std::vector<std::vector<std::int64_t>> z;
  for (const auto& row : m) {
    std::vector<std::int64_t> zr;
    for (const auto& x : row) zr.push_back(x.residue_value());
    z.push_back(std::move(zr));
  }
  return oracle::modp_rank(std::move(z), ring.modulus());
}

}  // namespace

TEST(Linalg, RankOfKnownMatrices) {
  const RingSpec q;
  EXPECT_EQ(rank(ints(q, {{1, 2}, {2, 4}}), 2, q), 1u);
  EXPECT_EQ(rank(ints(q, {{1, 0}, {0, 1}}), 2, q), 2u);
  EXPECT_EQ(rank({}, 3, q), 0u);
  const RingSpec z3 = RingSpec::integers_mod(3);
  // det = -3, singular mod 3.
  EXPECT_EQ(rank(ints(z3, {{1, 2}, {2, 1}}), 2, z3), 1u);
  EXPECT_EQ(rank(ints(q, {{1, 2}, {2, 1}}), 2, q), 2u);
}

TEST(Linalg, NullspaceIsCanonical) {
  const RingSpec q;
  const Matrix m = ints(q, {{1, 1, 0, 0}, {0, 0, 1, 1}});
  const Matrix n = nullspace(m, 4, q);
  ASSERT_EQ(n.size(), 2u);
  // Basis of the nullspace in reduced form: (1,-1,0,0)-type rows normalised to pivot 1.
  const Echelon e = row_reduce(n, 4, q);
  EXPECT_EQ(e.rows, n);
  for (const auto& v : n) {
    for (const auto& s : times(m, v, q)) EXPECT_TRUE(s.is_zero());
  }
}

TEST(Linalg, CompositeModulusRaises) {
  const RingSpec z4 = RingSpec::integers_mod(4);
  const Matrix m = ints(z4, {{2, 1}});
  EXPECT_THROW(rank(m, 2, z4), CompositeModulusUnsupported);
  EXPECT_THROW(nullspace(m, 2, z4), CompositeModulusUnsupported);
  EXPECT_THROW(row_reduce(m, 2, z4), CompositeModulusUnsupported);
}

TEST(Linalg, SolveAndMembership) {
  const RingSpec q;
  const Matrix a = ints(q, {{1, 2}, {3, 4}});
  const Vector b{Scalar::from_int(q, 5), Scalar::from_int(q, 6)};
  const auto x = solve(a, b, 2, q);
  ASSERT_TRUE(x);
  EXPECT_EQ(times(a, *x, q), b);
  const Matrix singular = ints(q, {{1, 1}, {1, 1}});
  EXPECT_FALSE(solve(singular, {Scalar::from_int(q, 0), Scalar::from_int(q, 1)}, 2, q));
  const Echelon e = row_reduce(singular, 2, q);
  EXPECT_TRUE(in_row_space(e, {Scalar::from_int(q, 3), Scalar::from_int(q, 3)}));
  EXPECT_FALSE(in_row_space(e, {Scalar::from_int(q, 3), Scalar::from_int(q, 2)}));
}

class LinalgRandom : public ::testing::TestWithParam<std::int64_t> {};

TEST_P(LinalgRandom, RankMatchesReferenceAndNullity) {
  const RingSpec ring = GetParam() == 0 ? RingSpec::rationals() : RingSpec::integers_mod(GetParam());
  std::mt19937_64 rng(99 + GetParam());
  for (int it = 0; it < 40; ++it) {
    const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7, k = 1 + rng() % 5;
    const Matrix m = random_matrix(rng, ring, r, c, k);
    const std::size_t rk = rank(m, c, ring);
    EXPECT_EQ(rk, reference_rank(m, ring));
    const Matrix n = nullspace(m, c, ring);
    EXPECT_EQ(n.size() + rk, c);
    for (const auto& v : n) {
      for (const auto& s : times(m, v, ring)) EXPECT_TRUE(s.is_zero());
    }
    // The reduced form only depends on the row space.
    Matrix shuffled = m;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const Echelon a = row_reduce(m, c, ring);
    const Echelon b = row_reduce(shuffled, c, ring);
    EXPECT_EQ(a.rows, b.rows);
    EXPECT_EQ(a.pivots, b.pivots);
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, LinalgRandom, ::testing::Values(0, 2, 3, 7));
