#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ktheta/integer_matrix.hpp"
#include "ktheta/lattice.hpp"
#include "ktheta/theta_form.hpp"

namespace ktheta {

/// A point of the circle ℝ/ℤ: the angle ζ stands for e^{2πiζ}. Always in [0, 1).
using Angle = mpq_class;

Angle normalize_angle(const mpq_class& x);
/// "p/q" (or "0"), the wire format for exact angles.
std::string angle_to_string(const Angle& a);
Angle angle_from_string(const std::string& s);

bool is_alternating(const IntegerMatrix& e);

/// A semi-character α: Λ → S¹ for the alternating form E,
///   α(λ + λ') = α(λ) α(λ') e^{πi E(λ, λ')},
/// determined by its values on the standard basis.
class SemiCharacter {
 public:
  SemiCharacter(IntegerMatrix form, std::vector<Angle> basisAngles);

  std::size_t rank() const { return angles_.size(); }
  std::size_t genus() const { return angles_.size() / 2; }
  const IntegerMatrix& form() const { return form_; }
  const std::vector<Angle>& basis_angles() const { return angles_; }

  /// Closed form Σ c_i ζ_i + ½ Σ_{i<j} c_i c_j E_ij (mod 1).
  Angle operator()(const IntegerVector& lambda) const;

 private:
  IntegerMatrix form_;
  std::vector<Angle> angles_;
};

Angle eval_semicharacter(const SemiCharacter& alpha, const IntegerVector& lambda);

/// Appell-Humbert datum (E = im H, α). H itself is rebuilt from (E, J) on demand.
class AHDatum {
 public:
  explicit AHDatum(SemiCharacter alpha);
  AHDatum(IntegerMatrix e, std::vector<Angle> basisAngles);

  const IntegerMatrix& E() const { return alpha_.form(); }
  const SemiCharacter& alpha() const { return alpha_; }
  std::size_t genus() const { return alpha_.genus(); }
  std::size_t rank() const { return alpha_.rank(); }

  bool operator==(const AHDatum& other) const {
    return E() == other.E() && alpha_.basis_angles() == other.alpha_.basis_angles();
  }

 private:
  SemiCharacter alpha_;
};

AHDatum trivial_datum(std::size_t genus);
AHDatum tensor(const AHDatum& d1, const AHDatum& d2);
AHDatum dual(const AHDatum& d);
/// Flat datum (E = 0) of the order-2 character λ ↦ (-1)^{λ·η}.
AHDatum flat_character(int genus, Bits eta);

/// (E_std, α) with α(λ) = (-1)^{q(λ mod 2)}: the datum of the symmetric theta bundle.
AHDatum alpha_from_theta(const QuadraticFormZ2& q);
/// Direct formula value q(λ mod 2)/2, independent of the semi-character recursion.
Angle theta_alpha_formula(const QuadraticFormZ2& q, const IntegerVector& lambda);

struct H0Count {
  Integer value = 0;
  bool degenerate = false;
};

/// Pfaffian |d_1 ⋯ d_g| of the elementary-divisor pairs; degenerate E is flagged.
/// Positivity against a complex structure is checked in the analytic layer.
H0Count h0_count(const IntegerMatrix& e);

/// E(τx, τy) = -E(x, y) on the basis and α(τ b) = -α(b) (mod 1) on the basis.
bool is_real_datum(const AHDatum& datum, const IntegerMatrix& tau);
bool is_real_datum(const AHDatum& datum, const AntiSymplecticInvolution& tau);

}  // namespace ktheta
