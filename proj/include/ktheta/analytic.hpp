#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ktheta/appell_humbert.hpp"
#include "ktheta/integer_matrix.hpp"
#include "ktheta/klein_model.hpp"
#include "ktheta/sweeps.hpp"
#include "ktheta/theta_form.hpp"

namespace ktheta {

using Complex = std::complex<double>;

/// Complex structure on ℝ^{2g} ≅ V with lattice ℤ^{2g}: e_i ↦ i-th unit
/// vector, f_j ↦ j-th column of Z = ½ H + i Y.
struct PeriodData {
  int genus = 0;
  IntegerMatrix hBlock;
  Eigen::MatrixXd Y;
  Eigen::MatrixXcd Z;
  /// Multiplication by i in lattice coordinates.
  Eigen::MatrixXd J;

  /// Complex coordinates x_e + Z x_f of a real lattice-coordinate vector.
  Eigen::VectorXcd to_complex(const Eigen::VectorXd& x) const;
  /// Lattice matrix of z ↦ z̄, rounded to integers after assembly.
  IntegerMatrix conjugation_matrix() const;
};

PeriodData complex_structure(const IntegerMatrix& hBlock, const Eigen::MatrixXd& Y);
/// Default Y = I_g.
PeriodData complex_structure(const RealCurveModel& model);
PeriodData complex_structure(const RealCurveModel& model, const Eigen::MatrixXd& Y);

/// Y with unit diagonal and constant off-diagonal `coupling`.
Eigen::MatrixXd coupled_imaginary_part(int genus, double coupling);

/// First failed PeriodData invariant, or nullopt.
std::optional<std::string> period_violation(const PeriodData& period, double tol = 1e-12);

/// Jᵗ E J = E within tol.
bool is_type_11(const IntegerMatrix& e, const PeriodData& period, double tol = 1e-12);

/// H(v, w) = E(v, Jw) + i E(v, w) as a g x g matrix M in complex
/// coordinates: H(v, w) = z_vᴴ M z_w. Throws ValidationError when E is not
/// of type (1,1) for J.
Eigen::MatrixXcd hermitian_from_alt(const IntegerMatrix& e, const PeriodData& period);

/// The same form evaluated directly on real lattice-coordinate vectors.
Complex hermitian_value(const IntegerMatrix& e, const PeriodData& period,
                        const Eigen::VectorXd& x, const Eigen::VectorXd& y);

Complex angle_to_unit(const Angle& a);

/// a(λ, v) = α(λ) exp(π [H(λ, v) + ½ H(λ, λ)]) for a complex point v ∈ ℂ^g.
Complex factor_of_automorphy(const AHDatum& datum, const PeriodData& period,
                             const IntegerVector& lambda, const Eigen::VectorXcd& v);

/// Sections count with the sign of the polarization: the Pfaffian when
/// H is positive definite for J, 0 otherwise; degenerate E is flagged.
H0Count h0_count(const IntegerMatrix& e, const PeriodData& period);

struct ThetaSeriesParams {
  int truncationRadius = 8;
  double zeroThreshold = 1e-8;
  int integrationSteps = 10000;
};

/// θ[a,b](z, Z) = Σ_{|m|∞ ≤ R} exp(πi (m+a)ᵗ Z (m+a) + 2πi (m+a)ᵗ (z+b)).
Complex riemann_theta(const std::vector<double>& a, const std::vector<double>& b,
                      const Eigen::VectorXcd& z, const PeriodData& period,
                      const ThetaSeriesParams& params);

/// Upper bound on the omitted terms at z = 0:
/// g · S_out · (2 + y^{-1/2})^{g-1} with y the least eigenvalue of Y and
/// S_out = 2 e^{-πy(R+½)²} / (1 - e^{-2πy(R+½)}).
double theta_tail_bound(const PeriodData& period, int truncationRadius);

/// Characteristic of a form: 2b_i = q(e_i), 2a_i = q(f_i).
void characteristic_of(const QuadraticFormZ2& q, std::vector<double>& a, std::vector<double>& b);

struct ParityProbe {
  bool matches = false;
  bool inconclusive = false;
  double magnitude = 0.0;
  int arf = 0;
};

/// Compares vanishing of θ[a,b](0) against Arf(q) = 1.
ParityProbe theta_parity_probe(const QuadraticFormZ2& q, const PeriodData& period,
                               const ThetaSeriesParams& params);

struct ParityCensus {
  std::size_t vanishing = 0;
  std::size_t mismatches = 0;
  std::size_t inconclusive = 0;
  double smallestNonzero = 0.0;
  double largestVanishing = 0.0;
  bool operator==(const ParityCensus&) const = default;
};

/// theta_parity_probe over all 2^{2g} forms.
ParityCensus theta_parity_census(const PeriodData& period, const ThetaSeriesParams& params,
                                 sweeps::Mode mode);

struct HolonomyResult {
  Complex value;
  bool converged = false;
};

/// Parallel transport of the Chern connection of the metric weight
/// exp(-π H(v, v)) along t ↦ [x0 + tλ], closed up with a(λ, x0). With x0 = 0
/// this approximates ᾱ(λ); in general ᾱ(λ) exp(2πi E(x0, λ)).
HolonomyResult holonomy_probe(const AHDatum& datum, const PeriodData& period,
                              const IntegerVector& lambda, const ThetaSeriesParams& params,
                              const Eigen::VectorXd& basePoint = Eigen::VectorXd());

/// Max over sampled plaquettes of |(i/2π) F - E| with F read off the
/// plaquette holonomy U ≈ 1 - F δ² (Wilson estimator, error O(δ²)).
double curvature_probe(const AHDatum& datum, const PeriodData& period, double gridStep);

}  // namespace ktheta
