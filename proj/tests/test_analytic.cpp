#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ktheta/analytic.hpp"
#include "ktheta/errors.hpp"

using namespace ktheta;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::VectorXd real_vector(const IntegerVector& v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i].get_d();
  return out;
}

Eigen::MatrixXd diag_y(int g) {
  Eigen::MatrixXd y = Eigen::MatrixXd::Zero(g, g);
  for (int i = 0; i < g; ++i) y(i, i) = i + 1;
  return y;
}

}  // namespace

TEST_SUITE("analytic") {

TEST_CASE("square torus") {
  const PeriodData p = complex_structure(IntegerMatrix(1, 1), Eigen::MatrixXd::Identity(1, 1));
  CHECK(std::abs(p.Z(0, 0) - Complex(0, 1)) < 1e-15);
  Eigen::MatrixXd j(2, 2);
  j << 0, -1, 1, 0;
  CHECK((p.J - j).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("period data invariants for standard models, g <= 3") {
  for (const auto& t : enumerate_types(3)) {
    if (t.n == 0) continue;
    const auto model = standard_model(t);
    for (const auto& y : {Eigen::MatrixXd(Eigen::MatrixXd::Identity(t.g, t.g)), diag_y(t.g),
                          coupled_imaginary_part(t.g, 0.5)}) {
      const PeriodData p = complex_structure(model, y);
      CAPTURE(t.to_string());
      CHECK_FALSE(period_violation(p).has_value());
      if (t.g > 0) {
        CHECK((p.J * p.J + Eigen::MatrixXd::Identity(2 * t.g, 2 * t.g)).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK(p.conjugation_matrix() == model.iotaStar);
      }
    }
  }
}

TEST_CASE("invalid imaginary parts are rejected") {
  const auto model = standard_model({2, 1, 0});
  Eigen::MatrixXd y(2, 2);
  y << 1, 2, 2, 1;
  CHECK_THROWS_AS(complex_structure(model, y), ValidationError);
  y << 1, 0.5, 0.4, 1;
  CHECK_THROWS_AS(complex_structure(model, y), ValidationError);
  CHECK_THROWS_AS(complex_structure(model, Eigen::MatrixXd::Identity(3, 3)), ValidationError);
}

TEST_CASE("hermitian form") {
  const PeriodData p = complex_structure(IntegerMatrix(1, 1), Eigen::MatrixXd::Identity(1, 1));
  const IntegerMatrix e = standard_symplectic_form(1);
  const Eigen::MatrixXcd h = hermitian_from_alt(e, p);
  CHECK(std::abs(h(0, 0) - Complex(1, 0)) < 1e-15);
  CHECK((hermitian_from_alt(e.scaled(2), p) - 2.0 * h).cwiseAbs().maxCoeff() < 1e-15);

  const auto model = standard_model({2, 1, 0});
  const PeriodData q = complex_structure(model, diag_y(2));
  const IntegerMatrix e2 = standard_symplectic_form(2);
  const Eigen::MatrixXcd m = hermitian_from_alt(e2, q);
  CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const Eigen::VectorXd x = Eigen::VectorXd::Unit(4, static_cast<Eigen::Index>(i));
      const Eigen::VectorXd y = Eigen::VectorXd::Unit(4, static_cast<Eigen::Index>(j));
      const Complex viaMatrix = q.to_complex(x).dot(m * q.to_complex(y));
      CHECK(std::abs(viaMatrix - hermitian_value(e2, q, x, y)) < 1e-12);
      CHECK(std::abs(viaMatrix.imag() - e2(i, j).get_d()) < 1e-12);
    }

  IntegerMatrix bad(4, 4);
  bad(0, 1) = 1;
  bad(1, 0) = -1;
  CHECK_FALSE(is_type_11(bad, q));
  CHECK_THROWS_AS(hermitian_from_alt(bad, q), ValidationError);
}

TEST_CASE("h0 count with a complex structure") {
  const auto model = standard_model({2, 1, 0});
  const PeriodData p = complex_structure(model);
  CHECK(h0_count(standard_symplectic_form(2), p).value == 1);
  CHECK(h0_count(standard_symplectic_form(2).scaled(2), p).value == 4);
  CHECK(h0_count(-standard_symplectic_form(2), p).value == 0);
}

TEST_CASE("factor of automorphy special cases") {
  const auto model = standard_model({1, 1, 1});
  const PeriodData p = complex_structure(model);
  const AHDatum theta = alpha_from_theta(QuadraticFormZ2(1, 0b01));
  Eigen::VectorXcd v(1);
  v << Complex(0.3, -0.7);
  CHECK(std::abs(factor_of_automorphy(theta, p, {0, 0}, v) - 1.0) < 1e-15);
  const AHDatum flat(IntegerMatrix(2, 2), {mpq_class(1, 3), mpq_class(1, 4)});
  for (const IntegerVector& l : {IntegerVector{1, 0}, IntegerVector{2, -1}}) {
    const Complex expected = angle_to_unit(flat.alpha()(l));
    CHECK(std::abs(factor_of_automorphy(flat, p, l, v) - expected) < 1e-14);
  }
}

TEST_CASE("riemann theta values") {
  const PeriodData p = complex_structure(IntegerMatrix(1, 1), Eigen::MatrixXd::Identity(1, 1));
  const ThetaSeriesParams params;
  const Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(1);
  double series = 0.0;
  for (int n = -30; n <= 30; ++n) series += std::exp(-kPi * n * n);
  const Complex even = riemann_theta({0.0}, {0.0}, zero, p, params);
  CHECK(std::abs(even - series) < 1e-14);
  CHECK(std::abs(even.real() - 1.0864348112133080) < 1e-12);
  CHECK(std::abs(riemann_theta({0.5}, {0.5}, zero, p, params)) < 1e-10);
}

TEST_CASE("theta parity law and truncation stability") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (int g = 1; g <= 2; ++g) {
    const auto model = standard_model({g, 1, g == 1 ? 1 : 0});
    const PeriodData p = complex_structure(model);
    ThetaSeriesParams r8, r6;
    r6.truncationRadius = 6;
    CHECK(theta_tail_bound(p, 8) < theta_tail_bound(p, 6));
    for (const auto& q : enumerate_theta(g)) {
      std::vector<double> a, b;
      characteristic_of(q, a, b);
      double ab = 0.0;
      for (int i = 0; i < g; ++i) ab += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
      Eigen::VectorXcd z(g);
      for (int i = 0; i < g; ++i) z(i) = Complex(u(rng), u(rng));
      const Complex plus = riemann_theta(a, b, z, p, r8);
      const Complex minus = riemann_theta(a, b, -z, p, r8);
      CHECK(std::abs(minus - std::exp(Complex(0, 4 * kPi * ab)) * plus) < 1e-9);
      const Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(g);
      CHECK(std::abs(riemann_theta(a, b, zero, p, r8) - riemann_theta(a, b, zero, p, r6)) < 1e-10);
      // Arf(q) = 4 a.b mod 2
      CHECK(static_cast<int>(std::lround(4 * ab)) % 2 == q.arf());
    }
  }
}

TEST_CASE("theta-null parity probes") {
  const PeriodData p = complex_structure(IntegerMatrix(1, 1), Eigen::MatrixXd::Identity(1, 1));
  const ThetaSeriesParams params;
  const ParityProbe odd = theta_parity_probe(QuadraticFormZ2(1, 0b11), p, params);
  CHECK(odd.matches);
  CHECK(odd.arf == 1);
  const ParityProbe even = theta_parity_probe(QuadraticFormZ2(1, 0), p, params);
  CHECK(even.matches);
  CHECK(std::abs(even.magnitude - 1.0864348112133080) < 1e-12);

  const auto model = standard_model({2, 1, 0});
  const PeriodData coupled = complex_structure(model, coupled_imaginary_part(2, 0.5));
  const auto census = theta_parity_census(coupled, params, sweeps::Mode::Serial);
  CHECK(census.vanishing == 6);
  CHECK(census.mismatches == 0);
  CHECK(census.inconclusive == 0);
  CHECK(census == theta_parity_census(coupled, params, sweeps::Mode::Parallel));

  // A diagonal period matrix kills even theta-nulls too; the probe must notice.
  const auto uncoupled =
      theta_parity_census(complex_structure(standard_model({2, 3, 0})), params, sweeps::Mode::Serial);
  CHECK(uncoupled.mismatches > 0);
}

TEST_CASE("holonomy probe") {
  const auto model = standard_model({1, 2, 0});
  const PeriodData p = complex_structure(model);
  const ThetaSeriesParams params;

  const HolonomyResult trivial = holonomy_probe(trivial_datum(1), p, {1, 0}, params);
  CHECK(trivial.converged);
  CHECK(std::abs(trivial.value - 1.0) < 1e-12);

  const AHDatum flat(IntegerMatrix(2, 2), {mpq_class(1, 5), mpq_class(2, 7)});
  for (const IntegerVector& l : {IntegerVector{1, 0}, IntegerVector{0, 1}, IntegerVector{3, -2}}) {
    const HolonomyResult h = holonomy_probe(flat, p, l, params);
    CHECK(std::abs(h.value - std::conj(angle_to_unit(flat.alpha()(l)))) < 1e-6);
  }

  for (const auto& q : enumerate_theta(1)) {
    const AHDatum d = alpha_from_theta(q);
    const HolonomyResult h = holonomy_probe(d, p, {1, 0}, params);
    CHECK(h.converged);
    CHECK(std::abs(h.value - std::conj(angle_to_unit(d.alpha()({1, 0})))) < 1e-6);
  }

  ThetaSeriesParams tooFew;
  tooFew.integrationSteps = 1;
  CHECK_FALSE(holonomy_probe(trivial_datum(1), p, {1, 0}, tooFew).converged);
}

TEST_CASE("holonomy at a shifted base point picks up exp(2 pi i E(x0, lambda))") {
  const auto model = standard_model({2, 1, 0});
  const PeriodData p = complex_structure(model, diag_y(2));
  const AHDatum d = alpha_from_theta(QuadraticFormZ2(2, 0b0110));
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::VectorXd x0(4);
    for (int i = 0; i < 4; ++i) x0(i) = u(rng);
    IntegerVector l(4);
    for (auto& x : l) x = static_cast<long>(rng() % 5) - 2;
    const Eigen::VectorXd lr = real_vector(l);
    double exx = 0.0;
    for (int i = 0; i < 2; ++i) exx += x0(i) * lr(i + 2) - x0(i + 2) * lr(i);
    const Complex expected = std::conj(angle_to_unit(d.alpha()(l))) * std::exp(Complex(0, 2 * kPi * exx));
    CHECK(std::abs(holonomy_probe(d, p, l, ThetaSeriesParams{}, x0).value - expected) < 1e-6);
  }
}

TEST_CASE("curvature probe") {
  const auto model = standard_model({1, 2, 0});
  const PeriodData p = complex_structure(model);
  const AHDatum theta = alpha_from_theta(QuadraticFormZ2(1, 0));
  const double coarse = curvature_probe(theta, p, 1e-2);
  const double fine = curvature_probe(theta, p, 5e-3);
  CHECK(coarse <= 1e-3);
  CHECK(coarse >= 3.0 * fine);
  CHECK(curvature_probe(flat_character(1, 0b01), p, 1e-2) <= 1e-12);
  const double doubled = curvature_probe(AHDatum(standard_symplectic_form(1).scaled(2), {0, 0}), p, 1e-2);
  CHECK(doubled <= 4e-3);
  CHECK_THROWS_AS(curvature_probe(theta, p, 0.0), ValidationError);
}

}  // TEST_SUITE
