#include "ktheta/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "ktheta/errors.hpp"

namespace ktheta {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

Eigen::MatrixXd to_double(const IntegerMatrix& m) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d();
  return out;
}

Eigen::VectorXd to_double(const IntegerVector& v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i].get_d();
  return out;
}

double min_eigenvalue(const Eigen::MatrixXd& sym) {
  if (sym.rows() == 0) return std::numeric_limits<double>::infinity();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

Complex log_automorphy_without_alpha(const Eigen::MatrixXcd& m, const PeriodData& period,
                                     const Eigen::VectorXd& lambda, const Eigen::VectorXcd& v) {
  const Eigen::VectorXcd zl = period.to_complex(lambda);
  const Complex hlv = zl.dot(m * v);  // dot() conjugates its left argument
  const Complex hll = zl.dot(m * zl);
  return kPi * (hlv + 0.5 * hll);
}

}  // namespace

Eigen::VectorXcd PeriodData::to_complex(const Eigen::VectorXd& x) const {
  const Eigen::Index g = genus;
  if (x.size() != 2 * g) throw std::invalid_argument("to_complex: size mismatch");
  Eigen::VectorXcd z = x.head(g).cast<Complex>();
  z += Z * x.tail(g).cast<Complex>();
  return z;
}

IntegerMatrix PeriodData::conjugation_matrix() const {
  const Eigen::Index g = genus;
  const Eigen::MatrixXd yInv = Y.inverse();
  const Eigen::MatrixXd x = Z.real();
  IntegerMatrix out(static_cast<std::size_t>(2 * g), static_cast<std::size_t>(2 * g));
  for (Eigen::Index j = 0; j < 2 * g; ++j) {
    Eigen::VectorXd basis = Eigen::VectorXd::Zero(2 * g);
    basis(j) = 1.0;
    const Eigen::VectorXcd w = to_complex(basis).conjugate();
    Eigen::VectorXd back(2 * g);
    back.tail(g) = yInv * w.imag();
    back.head(g) = w.real() - x * back.tail(g);
    for (Eigen::Index i = 0; i < 2 * g; ++i) {
      const double r = std::round(back(i));
      if (std::abs(back(i) - r) > 1e-9)
        throw VerificationFailure("conjugation does not preserve the lattice");
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = static_cast<long>(r);
    }
  }
  return out;
}

PeriodData complex_structure(const IntegerMatrix& hBlock, const Eigen::MatrixXd& Y) {
  const auto g = static_cast<Eigen::Index>(hBlock.rows());
  if (Y.rows() != g || Y.cols() != g) throw ValidationError("Y must be g x g");
  if (g > 0 && (Y - Y.transpose()).cwiseAbs().maxCoeff() > 0.0)
    throw ValidationError("Y must be symmetric");
  if (g > 0 && !(min_eigenvalue(Y) > 1e-12)) throw ValidationError("Y must be positive definite");

  PeriodData p;
  p.genus = static_cast<int>(g);
  p.hBlock = hBlock;
  p.Y = Y;
  const Eigen::MatrixXd x = 0.5 * to_double(hBlock);
  p.Z = x.cast<Complex>() + kI * Y.cast<Complex>();
  const Eigen::MatrixXd yInv = g > 0 ? Eigen::MatrixXd(Y.inverse()) : Eigen::MatrixXd(0, 0);
  p.J = Eigen::MatrixXd::Zero(2 * g, 2 * g);
  p.J.topLeftCorner(g, g) = -x * yInv;
  p.J.topRightCorner(g, g) = -Y - x * yInv * x;
  p.J.bottomLeftCorner(g, g) = yInv;
  p.J.bottomRightCorner(g, g) = yInv * x;
  return p;
}

PeriodData complex_structure(const RealCurveModel& model) {
  const auto g = static_cast<Eigen::Index>(model.genus());
  return complex_structure(model.hBlock, Eigen::MatrixXd::Identity(g, g));
}

PeriodData complex_structure(const RealCurveModel& model, const Eigen::MatrixXd& Y) {
  return complex_structure(model.hBlock, Y);
}

Eigen::MatrixXd coupled_imaginary_part(int genus, double coupling) {
  Eigen::MatrixXd y = Eigen::MatrixXd::Constant(genus, genus, coupling);
  y.diagonal().setOnes();
  return y;
}

bool is_type_11(const IntegerMatrix& e, const PeriodData& period, double tol) {
  const Eigen::MatrixXd ed = to_double(e);
  if (ed.rows() != period.J.rows()) throw ValidationError("form and period genus differ");
  if (ed.rows() == 0) return true;
  return (period.J.transpose() * ed * period.J - ed).cwiseAbs().maxCoeff() <= tol;
}

std::optional<std::string> period_violation(const PeriodData& period, double tol) {
  const Eigen::Index g = period.genus;
  if (g == 0) return std::nullopt;
  if (!(min_eigenvalue(period.Y) > tol)) return "Y is not positive definite";
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(2 * g, 2 * g);
  if ((period.J * period.J + id).cwiseAbs().maxCoeff() > tol) return "J^2 != -I";
  const IntegerMatrix e = standard_symplectic_form(static_cast<std::size_t>(g));
  if (!is_type_11(e, period, tol)) return "J^t E J != E (not of type (1,1))";
  const Eigen::MatrixXd ej = to_double(e) * period.J;
  if (!(min_eigenvalue(0.5 * (ej + ej.transpose())) > 0.0)) return "E(v, Jv) is not positive";
  if (!(period.conjugation_matrix() == involution_from_h_block(period.hBlock)))
    return "conjugation matrix differs from iota*";
  return std::nullopt;
}

Eigen::MatrixXcd hermitian_from_alt(const IntegerMatrix& e, const PeriodData& period) {
  if (!is_type_11(e, period, 1e-9))
    throw ValidationError("E is not of type (1,1) for the complex structure");
  const Eigen::Index g = period.genus;
  const Eigen::MatrixXd ed = to_double(e);
  const Eigen::MatrixXd ej = ed * period.J;
  Eigen::MatrixXcd m(g, g);
  for (Eigen::Index k = 0; k < g; ++k)
    for (Eigen::Index l = 0; l < g; ++l) m(k, l) = Complex(ej(k, l), ed(k, l));
  return m;
}

Complex hermitian_value(const IntegerMatrix& e, const PeriodData& period,
                        const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const Eigen::MatrixXd ed = to_double(e);
  return Complex(x.dot(ed * (period.J * y)), x.dot(ed * y));
}

Complex angle_to_unit(const Angle& a) { return std::exp(2.0 * kPi * kI * a.get_d()); }

Complex factor_of_automorphy(const AHDatum& datum, const PeriodData& period,
                             const IntegerVector& lambda, const Eigen::VectorXcd& v) {
  const Eigen::MatrixXcd m = hermitian_from_alt(datum.E(), period);
  const Complex logA = log_automorphy_without_alpha(m, period, to_double(lambda), v);
  return angle_to_unit(datum.alpha()(lambda)) * std::exp(logA);
}

H0Count h0_count(const IntegerMatrix& e, const PeriodData& period) {
  H0Count base = h0_count(e);
  if (base.degenerate) return base;
  const Eigen::MatrixXcd m = hermitian_from_alt(e, period);
  if (m.rows() == 0) return base;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  if (!(es.eigenvalues().minCoeff() > 0.0)) base.value = 0;
  return base;
}

Complex riemann_theta(const std::vector<double>& a, const std::vector<double>& b,
                      const Eigen::VectorXcd& z, const PeriodData& period,
                      const ThetaSeriesParams& params) {
  const auto g = static_cast<std::size_t>(period.genus);
  if (a.size() != g || b.size() != g || static_cast<std::size_t>(z.size()) != g)
    throw ValidationError("riemann_theta: characteristic or point has the wrong length");
  const int r = params.truncationRadius;
  if (r < 1) throw ValidationError("truncation radius must be >= 1");
  std::vector<int> m(g, -r);
  Eigen::VectorXd n(static_cast<Eigen::Index>(g));
  Eigen::VectorXcd zb(static_cast<Eigen::Index>(g));
  for (std::size_t i = 0; i < g; ++i) zb(static_cast<Eigen::Index>(i)) = z(static_cast<Eigen::Index>(i)) + b[i];
  Complex sum = 0.0;
  while (true) {
    for (std::size_t i = 0; i < g; ++i) n(static_cast<Eigen::Index>(i)) = m[i] + a[i];
    const Eigen::VectorXcd nc = n.cast<Complex>();
    const Complex quad = nc.transpose() * period.Z * nc;
    const Complex lin = nc.transpose() * zb;
    sum += std::exp(kPi * kI * quad + 2.0 * kPi * kI * lin);
    std::size_t k = 0;
    while (k < g && m[k] == r) m[k++] = -r;
    if (k == g) break;
    ++m[k];
  }
  return sum;
}

double theta_tail_bound(const PeriodData& period, int truncationRadius) {
  const int g = period.genus;
  if (g == 0) return 0.0;
  const double y = min_eigenvalue(period.Y);
  const double edge = truncationRadius + 0.5;
  const double out = 2.0 * std::exp(-kPi * y * edge * edge) / (1.0 - std::exp(-2.0 * kPi * y * edge));
  return g * out * std::pow(2.0 + 1.0 / std::sqrt(y), g - 1);
}

void characteristic_of(const QuadraticFormZ2& q, std::vector<double>& a, std::vector<double>& b) {
  const int g = q.genus();
  a.assign(static_cast<std::size_t>(g), 0.0);
  b.assign(static_cast<std::size_t>(g), 0.0);
  for (int i = 0; i < g; ++i) {
    b[static_cast<std::size_t>(i)] = 0.5 * q.basis_value(i);
    a[static_cast<std::size_t>(i)] = 0.5 * q.basis_value(g + i);
  }
}

ParityProbe theta_parity_probe(const QuadraticFormZ2& q, const PeriodData& period,
                               const ThetaSeriesParams& params) {
  if (q.genus() != period.genus) throw ValidationError("theta_parity_probe: genus mismatch");
  std::vector<double> a, b;
  characteristic_of(q, a, b);
  const Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(period.genus);
  ParityProbe probe;
  probe.arf = q.arf();
  probe.magnitude = std::abs(riemann_theta(a, b, zero, period, params));
  const bool vanishes = probe.magnitude < params.zeroThreshold;
  const bool nonzero = probe.magnitude >= 100.0 * params.zeroThreshold;
  probe.inconclusive = !vanishes && !nonzero;
  probe.matches = !probe.inconclusive && vanishes == (probe.arf == 1);
  return probe;
}

ParityCensus theta_parity_census(const PeriodData& period, const ThetaSeriesParams& params,
                                 sweeps::Mode mode) {
  const auto total = static_cast<std::int64_t>(theta_count(period.genus));
  std::vector<ParityProbe> probes(static_cast<std::size_t>(total));
  auto body = [&](std::int64_t i) {
    probes[static_cast<std::size_t>(i)] =
        theta_parity_probe(QuadraticFormZ2(period.genus, static_cast<Bits>(i)), period, params);
  };
  if (mode == sweeps::Mode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < total; ++i) body(i);
  } else {
    for (std::int64_t i = 0; i < total; ++i) body(i);
  }
  ParityCensus c;
  c.smallestNonzero = std::numeric_limits<double>::infinity();
  for (const auto& p : probes) {
    if (p.inconclusive) ++c.inconclusive;
    if (!p.matches) ++c.mismatches;
    if (p.magnitude < params.zeroThreshold) {
      ++c.vanishing;
      c.largestVanishing = std::max(c.largestVanishing, p.magnitude);
    } else {
      c.smallestNonzero = std::min(c.smallestNonzero, p.magnitude);
    }
  }
  return c;
}

HolonomyResult holonomy_probe(const AHDatum& datum, const PeriodData& period,
                              const IntegerVector& lambda, const ThetaSeriesParams& params,
                              const Eigen::VectorXd& basePoint) {
  const Eigen::Index n = 2 * period.genus;
  if (static_cast<Eigen::Index>(lambda.size()) != n)
    throw ValidationError("holonomy_probe: lattice vector has the wrong length");
  const Eigen::VectorXd x0 = basePoint.size() == 0 ? Eigen::VectorXd(Eigen::VectorXd::Zero(n)) : basePoint;
  if (x0.size() != n) throw ValidationError("holonomy_probe: base point has the wrong length");
  const Eigen::MatrixXcd m = hermitian_from_alt(datum.E(), period);
  const Eigen::VectorXd l = to_double(lambda);
  const Eigen::MatrixXd ed = to_double(datum.E());
  // H(c, λ) = cᵗ E J λ + i cᵗ E λ along the path c(t) = x0 + tλ.
  const Eigen::VectorXd re = ed * (period.J * l);
  const Eigen::VectorXd im = ed * l;
  const Complex alpha = angle_to_unit(datum.alpha()(lambda));
  const Complex logClose = log_automorphy_without_alpha(m, period, l, period.to_complex(x0));

  auto transport = [&](int steps) {
    const double dt = 1.0 / steps;
    Complex logXi = 0.0;
    for (int k = 0; k < steps; ++k) {
      const Eigen::VectorXd c = x0 + ((k + 0.5) * dt) * l;
      logXi += kPi * Complex(c.dot(re), c.dot(im)) * dt;
    }
    return std::exp(logXi - logClose) / alpha;
  };

  HolonomyResult result;
  const int steps = params.integrationSteps;
  if (steps < 2) {
    result.value = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
    return result;
  }
  result.value = transport(steps);
  const Complex coarse = transport(steps / 2);
  result.converged = std::abs(result.value - coarse) <= 1e-6 && std::abs(std::abs(result.value) - 1.0) <= 1e-6;
  return result;
}

double curvature_probe(const AHDatum& datum, const PeriodData& period, double gridStep) {
  if (!(gridStep > 0.0)) throw ValidationError("curvature_probe: grid step must be positive");
  const Eigen::Index n = 2 * period.genus;
  if (static_cast<Eigen::Index>(datum.rank()) != n) throw ValidationError("curvature_probe: genus mismatch");
  if (n == 0) return 0.0;
  if (!is_type_11(datum.E(), period, 1e-9))
    throw ValidationError("E is not of type (1,1) for the complex structure");
  const Eigen::MatrixXd ed = to_double(datum.E());
  const Eigen::MatrixXd ej = ed * period.J;
  // Chern connection transport over one straight edge, midpoint rule.
  auto edge = [&](const Eigen::VectorXd& from, const Eigen::VectorXd& step) {
    const Eigen::VectorXd mid = from + 0.5 * step;
    return kPi * Complex(mid.dot(ej * step), mid.dot(ed * step));
  };
  const int samplesPerAxis = n <= 8 ? 3 : 2;
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  double worst = 0.0;
  while (true) {
    Eigen::VectorXd p(n);
    for (Eigen::Index i = 0; i < n; ++i)
      p(i) = static_cast<double>(idx[static_cast<std::size_t>(i)]) / samplesPerAxis;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) {
        const Eigen::VectorXd w1 = gridStep * Eigen::VectorXd::Unit(n, i);
        const Eigen::VectorXd w2 = gridStep * Eigen::VectorXd::Unit(n, j);
        const Complex logHol = edge(p, w1) + edge(p + w1, w2) + edge(p + w1 + w2, -w1) + edge(p + w2, -w2);
        const Complex hol = std::exp(logHol);
        const Complex estimate = (hol - 1.0) / (2.0 * kPi * kI * gridStep * gridStep);
        worst = std::max(worst, std::abs(estimate - ed(i, j)));
      }
    std::size_t k = 0;
    while (k < idx.size() && idx[k] == samplesPerAxis - 1) idx[k++] = 0;
    if (k == idx.size()) break;
    ++idx[k];
  }
  return worst;
}

}  // namespace ktheta
