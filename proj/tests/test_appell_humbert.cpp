#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ktheta/appell_humbert.hpp"
#include "ktheta/errors.hpp"
#include "ktheta/klein_model.hpp"
#include "ktheta/real_sw.hpp"

using namespace ktheta;

namespace {

Angle half(long k) { return normalize_angle(mpq_class(k, 2)); }

// Walks λ one unit step at a time in the given coordinate order using
// α(μ ± b) = α(μ) ± α(b) + ½E(μ, ±b), starting from α(0) = 0.
Angle walk(const AHDatum& d, const IntegerVector& lambda, const std::vector<std::size_t>& order) {
  const std::size_t n = lambda.size();
  IntegerVector mu(n, Integer(0));
  mpq_class acc = 0;
  for (std::size_t i : order) {
    const long steps = lambda[i].get_si();
    const int sign = steps >= 0 ? 1 : -1;
    for (long s = 0; s < std::labs(steps); ++s) {
      IntegerVector b(n, Integer(0));
      b[i] = sign;
      // α(−b) = −α(b) + ½E(b, b) = −α(b).
      acc += sign * d.alpha().basis_angles()[i] + mpq_class(bilinear(d.E(), mu, b)) / 2;
      mu = mu + b;
    }
  }
  return normalize_angle(acc);
}

AHDatum random_datum(std::mt19937_64& rng, std::size_t g, int scale) {
  IntegerMatrix e(2 * g, 2 * g);
  for (std::size_t i = 0; i < 2 * g; ++i)
    for (std::size_t j = i + 1; j < 2 * g; ++j) {
      e(i, j) = scale * (static_cast<long>(rng() % 5) - 2);
      e(j, i) = -e(i, j);
    }
  std::vector<Angle> angles(2 * g);
  for (auto& a : angles) a = normalize_angle(mpq_class(static_cast<long>(rng() % 30), 30));
  return AHDatum(e, angles);
}

}  // namespace

TEST_SUITE("appell_humbert") {

TEST_CASE("angles") {
  CHECK(normalize_angle(mpq_class(-1, 3)) == mpq_class(2, 3));
  CHECK(normalize_angle(mpq_class(7, 2)) == mpq_class(1, 2));
  CHECK(angle_to_string(mpq_class(1, 2)) == "1/2");
  CHECK(angle_to_string(Angle(0)) == "0");
  CHECK(angle_from_string("5/4") == mpq_class(1, 4));
  CHECK_THROWS_AS(angle_from_string("x"), ValidationError);
}

TEST_CASE("semi-character examples") {
  const AHDatum d(standard_symplectic_form(1), {Angle(0), Angle(0)});
  CHECK(d.alpha()({1, 1}) == half(1));
  CHECK(d.alpha()({2, 0}) == 0);
  CHECK(walk(d, {1, 1}, {0, 1}) == walk(d, {1, 1}, {1, 0}));
  CHECK_THROWS_AS(SemiCharacter(IntegerMatrix(2, 2, {0, 1, 1, 0}), {Angle(0), Angle(0)}), ValidationError);
}

TEST_CASE("semi-character evaluation is path independent") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t g = 1 + rng() % 3;
    const AHDatum d = random_datum(rng, g, 1 + static_cast<int>(rng() % 2));
    IntegerVector lambda(2 * g);
    for (auto& x : lambda) x = static_cast<long>(rng() % 9) - 4;
    std::vector<std::size_t> order(2 * g);
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(d.alpha()(lambda) == walk(d, lambda, order));
  }
}

TEST_CASE("tensor and dual form a group") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t g = 1 + rng() % 3;
    const AHDatum d1 = random_datum(rng, g, 1), d2 = random_datum(rng, g, 2);
    CHECK(tensor(d1, dual(d1)) == trivial_datum(g));
    const AHDatum prod = tensor(d1, d2);
    CHECK(prod.E() == d1.E() + d2.E());
    IntegerVector lambda(2 * g);
    for (auto& x : lambda) x = static_cast<long>(rng() % 7) - 3;
    CHECK(prod.alpha()(lambda) == normalize_angle(d1.alpha()(lambda) + d2.alpha()(lambda)));
    CHECK(dual(d1).alpha()(lambda) == normalize_angle(-d1.alpha()(lambda)));
  }
  const AHDatum theta = alpha_from_theta(QuadraticFormZ2(1, 0b01));
  const AHDatum chi = flat_character(1, 0b10);
  const AHDatum twisted = tensor(theta, chi);
  CHECK(twisted.E() == standard_symplectic_form(1));
  CHECK(twisted.alpha()({1, 0}) == normalize_angle(theta.alpha()({1, 0}) + chi.alpha()({1, 0})));
}

TEST_CASE("alpha_from_theta examples and translation intertwining") {
  const AHDatum d0 = alpha_from_theta(QuadraticFormZ2(1, 0));
  CHECK(d0.alpha()({1, 0}) == 0);
  CHECK(d0.alpha()({0, 1}) == 0);
  CHECK(d0.alpha()({1, 1}) == half(1));
  CHECK(theta_alpha_formula(QuadraticFormZ2(1, 0), {1, 1}) == half(1));
  CHECK(alpha_from_theta(QuadraticFormZ2(1, 0b01)).alpha()({1, 0}) == half(1));
  for (int g = 0; g <= 2; ++g)
    for (const auto& q : enumerate_theta(g))
      for (Bits eta = 0; eta < theta_count(g); ++eta)
        CHECK(alpha_from_theta(translate(q, eta)) == tensor(alpha_from_theta(q), flat_character(g, eta)));
}

TEST_CASE("flat order-two characters biject with the translation group") {
  for (int g = 0; g <= 3; ++g) {
    std::set<std::vector<std::string>> seen;
    for (Bits eta = 0; eta < theta_count(g); ++eta) {
      const AHDatum chi = flat_character(g, eta);
      CHECK(chi.E().is_zero());
      std::vector<std::string> key;
      for (const auto& a : chi.alpha().basis_angles()) {
        CHECK((a == 0 || a == half(1)));
        key.push_back(angle_to_string(a));
      }
      seen.insert(key);
    }
    CHECK(seen.size() == theta_count(g));
  }
}

TEST_CASE("h0 count") {
  CHECK(h0_count(standard_symplectic_form(1)).value == 1);
  CHECK(h0_count(standard_symplectic_form(3)).value == 1);
  CHECK(h0_count(standard_symplectic_form(1).scaled(2)).value == 2);
  CHECK(h0_count(standard_symplectic_form(2).scaled(3)).value == 9);
  const H0Count zero = h0_count(IntegerMatrix(2, 2));
  CHECK(zero.degenerate);
  CHECK(zero.value == 0);
}

TEST_CASE("realness of data") {
  const auto model = standard_model({1, 1, 1});
  const auto tau = picard_involution(model);
  for (const auto& q : real_theta(model)) CHECK(is_real_datum(alpha_from_theta(q), tau));

  // τ = diag(-1, 1) fixes f; a flat angle 1/3 there is not self-conjugate.
  const auto tau120 = picard_involution(standard_model({1, 2, 0}));
  CHECK_FALSE(is_real_datum(AHDatum(IntegerMatrix(2, 2), {Angle(0), mpq_class(1, 3)}), tau120));
  CHECK(is_real_datum(AHDatum(IntegerMatrix(2, 2), {Angle(0), half(1)}), tau120));
  CHECK_FALSE(is_real_datum(alpha_from_theta(QuadraticFormZ2(1, 0)), IntegerMatrix::identity(2)));
}

TEST_CASE("real theta data take values +-1 on the invariant lattice, g <= 3") {
  for (const auto& t : enumerate_types(3)) {
    if (t.n == 0) continue;
    const auto model = standard_model(t);
    const auto tau = picard_involution(model);
    const IntegerMatrix basis = invariant_basis(tau);
    for (const auto& q : enumerate_theta(t.g)) {
      const AHDatum d = alpha_from_theta(q);
      const bool real = is_real_theta(q, model);
      CHECK(is_real_datum(d, tau) == real);
      if (!real) continue;
      for (std::size_t i = 0; i < basis.rows(); ++i) {
        const Angle a = d.alpha()(basis.row(i));
        CHECK((a == 0 || a == half(1)));
      }
    }
  }
}

}  // TEST_SUITE
