#include <doctest.h>

#include <random>

#include "ktheta/errors.hpp"
#include "ktheta/lattice.hpp"
#include "oracles.hpp"

using namespace ktheta;

namespace {

void check_smith(const IntegerMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  CHECK(s.U * m * s.V == s.D);
  CHECK(s.D.is_diagonal());
  CHECK(abs(oracle::det(s.U)) == 1);
  CHECK(abs(oracle::det(s.V)) == 1);
  const auto d = s.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d[i] >= 0);
    if (i + 1 < d.size() && d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
    if (d[i] == 0)
      for (std::size_t j = i; j < d.size(); ++j) CHECK(d[j] == 0);
  }
  CHECK(d == oracle::invariant_factors(m));
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("smith normal form examples") {
  CHECK(smith_normal_form(IntegerMatrix::identity(2)).D == IntegerMatrix::identity(2));
  CHECK(smith_normal_form(IntegerMatrix(2, 2, {2, 1, 0, 2})).D == IntegerMatrix(2, 2, {1, 0, 0, 4}));
  CHECK(smith_normal_form(IntegerMatrix(2, 2, {0, 2, -2, 0})).D == IntegerMatrix(2, 2, {2, 0, 0, 2}));
  check_smith(IntegerMatrix(2, 2, {2, 1, 0, 2}));
  check_smith(IntegerMatrix(2, 2, {0, 2, -2, 0}));
}

TEST_CASE("smith normal form of degenerate and zero-sized input") {
  const SmithForm empty = smith_normal_form(IntegerMatrix(0, 0));
  CHECK(empty.D.rows() == 0);
  CHECK(empty.rank() == 0);
  check_smith(IntegerMatrix(2, 3));
  check_smith(IntegerMatrix(3, 2, {1, 2, 2, 4, 3, 6}));
  CHECK(smith_normal_form(IntegerMatrix(3, 2, {1, 2, 2, 4, 3, 6})).rank() == 1);
}

TEST_CASE("smith normal form agrees with determinantal divisors on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    check_smith(oracle::random_matrix(rng, r, c, 6));
  }
}

TEST_CASE("smith normal form with large pivots stays exact") {
  IntegerMatrix m(3, 3, {1000003, 999983, 7, 65537, 2147483647, 11, 3, 5, 4294967291});
  m(0, 0) *= Integer("123456789012345678901");
  check_smith(m);
}

TEST_CASE("quotient group examples") {
  const auto q2 = quotient_group({{2, 0}, {0, 2}}, 2);
  CHECK(q2.elementaryDivisors == std::vector<Integer>{2, 2});
  CHECK(q2.order == 4);
  CHECK(q2.cosetRepresentatives.size() == 4);

  const auto q1 = quotient_group({{1, 0}, {0, 1}}, 2);
  CHECK(q1.order == 1);
  CHECK(q1.elementaryDivisors.empty());
  CHECK(q1.cosetRepresentatives == std::vector<IntegerVector>{{0, 0}});

  const auto q3 = quotient_group({{2}}, 1);
  CHECK(q3.order == 2);
  CHECK(q3.cosetRepresentatives == std::vector<IntegerVector>{{0}, {1}});

  const auto inf = quotient_group({{1, 1}}, 2);
  CHECK(inf.infiniteIndex);

  const auto zero = quotient_group({}, 0);
  CHECK(zero.order == 1);
  CHECK_FALSE(zero.infiniteIndex);
}

TEST_CASE("quotient group order and representatives match the adjugate oracle") {
  std::mt19937_64 rng(11);
  int tested = 0;
  while (tested < 60) {
    const std::size_t n = 1 + rng() % 3;
    const IntegerMatrix g = oracle::random_matrix(rng, n, n, 4);
    const Integer d = oracle::det(g);
    if (d == 0) continue;
    std::vector<IntegerVector> gens;
    for (std::size_t j = 0; j < n; ++j) gens.push_back(g.column(j));
    const FiniteQuotient q = quotient_group(gens, n);
    CHECK_FALSE(q.infiniteIndex);
    CHECK(q.order == abs(d));
    REQUIRE(q.cosetRepresentatives.size() == Integer(abs(d)).get_ui());
    for (std::size_t i = 0; i < q.cosetRepresentatives.size(); ++i) {
      if (i > 0) CHECK(q.cosetRepresentatives[i - 1] < q.cosetRepresentatives[i]);
      for (std::size_t j = i + 1; j < q.cosetRepresentatives.size(); ++j)
        CHECK_FALSE(oracle::in_full_rank_span(g, q.cosetRepresentatives[i] - q.cosetRepresentatives[j]));
    }
    // reduce() picks the listed representative of a random vector's class.
    IntegerVector v(n);
    for (auto& x : v) x = static_cast<long>(rng() % 41) - 20;
    const IntegerVector r = q.reduce(v);
    CHECK(oracle::in_full_rank_span(g, v - r));
    CHECK(std::find(q.cosetRepresentatives.begin(), q.cosetRepresentatives.end(), r) !=
          q.cosetRepresentatives.end());
    ++tested;
  }
}

TEST_CASE("hermite rows and integer solving") {
  const IntegerMatrix h = hermite_rows(IntegerMatrix(3, 2, {2, 4, 3, 6, 0, 0}));
  CHECK(h == IntegerMatrix(1, 2, {1, 2}));
  const auto x = solve_integer({{2, 0}, {0, 3}}, {4, 9});
  REQUIRE(x.has_value());
  CHECK(*x == IntegerVector{2, 3});
  CHECK_FALSE(solve_integer({{2, 0}, {0, 3}}, {1, 0}).has_value());
  CHECK(is_saturated({{1, 2}}, 2));
  CHECK_FALSE(is_saturated({{2, 4}}, 2));
}

TEST_CASE("eigenlattice examples") {
  CHECK(eigenlattice(IntegerMatrix(2, 2, {1, 0, 0, -1}), 1) == std::vector<IntegerVector>{{1, 0}});
  CHECK(eigenlattice(IntegerMatrix(2, 2, {1, 1, 0, -1}), -1) == std::vector<IntegerVector>{{1, -2}});
  CHECK(eigenlattice(IntegerMatrix::identity(2), -1).empty());
}

TEST_CASE("anti-symplectic involutions") {
  CHECK(AntiSymplecticInvolution::satisfies_axioms(IntegerMatrix(2, 2, {1, 1, 0, -1})));
  CHECK_FALSE(AntiSymplecticInvolution::satisfies_axioms(IntegerMatrix::identity(2)));
  CHECK_THROWS_AS(AntiSymplecticInvolution(IntegerMatrix::identity(2)), std::invalid_argument);
  const AntiSymplecticInvolution t(IntegerMatrix(2, 2, {1, 1, 0, -1}));
  CHECK(t.negated().matrix() == IntegerMatrix(2, 2, {-1, -1, 0, 1}));
}

TEST_CASE("eigenlattices of [[I,H],[0,-I]] are saturated with ranks g + g") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t g = 1 + rng() % 3;
    IntegerMatrix h(g, g);
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = i; j < g; ++j) h(i, j) = h(j, i) = static_cast<long>(rng() % 5) - 2;
    IntegerMatrix t(2 * g, 2 * g);
    for (std::size_t i = 0; i < g; ++i) {
      t(i, i) = 1;
      t(g + i, g + i) = -1;
      for (std::size_t j = 0; j < g; ++j) t(i, g + j) = h(i, j);
    }
    REQUIRE(AntiSymplecticInvolution::satisfies_axioms(t));
    std::size_t total = 0;
    for (int sign : {1, -1}) {
      const auto basis = eigenlattice(t, sign);
      total += basis.size();
      CHECK(basis.size() == g);
      for (const auto& v : basis) CHECK(t * v == (sign == 1 ? v : -v));
      // Saturated iff the gcd of maximal minors is 1.
      const IntegerMatrix b = IntegerMatrix::from_rows(basis, 2 * g);
      CHECK(oracle::determinantal_divisor(b, basis.size()) == 1);
    }
    CHECK(total == 2 * g);
  }
}

}  // TEST_SUITE
