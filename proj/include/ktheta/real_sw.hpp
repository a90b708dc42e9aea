#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ktheta/appell_humbert.hpp"
#include "ktheta/integer_matrix.hpp"
#include "ktheta/klein_model.hpp"
#include "ktheta/lattice.hpp"
#include "ktheta/theta_form.hpp"

namespace ktheta {

/// A connected component [μ] of the real torus T^τ, μ ∈ ½Λ^{-τ}. Stored as 2μ.
struct RealComponent {
  IntegerVector twiceMu;

  std::vector<mpq_class> mu() const;
  std::vector<std::string> mu_strings() const;
  bool operator==(const RealComponent&) const = default;
};

/// ½Λ^{-τ} / ½(1-τ)Λ, realized through Λ^{-τ} / (1-τ)Λ by doubling.
class ComponentGroup {
 public:
  explicit ComponentGroup(const AntiSymplecticInvolution& tau);

  /// Canonical representatives, [0] first.
  const std::vector<RealComponent>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }
  /// Canonical representative of the class of μ (given as 2μ ∈ Λ^{-τ}).
  RealComponent canonical(const IntegerVector& twiceMu) const;
  const IntegerMatrix& anti_basis() const { return antiBasis_; }
  const FiniteQuotient& quotient() const { return quotient_; }

 private:
  IntegerMatrix antiBasis_;
  FiniteQuotient quotient_;
  std::vector<RealComponent> components_;
};

std::vector<RealComponent> component_group(const AntiSymplecticInvolution& tau);

/// A homomorphism Λ^τ → ℤ₂ given by its values on an echelon basis of Λ^τ.
class Z2Homomorphism {
 public:
  Z2Homomorphism(IntegerMatrix basis, std::vector<int> values);

  const IntegerMatrix& basis() const { return basis_; }
  const std::vector<int>& values() const { return values_; }
  /// Throws std::invalid_argument when v is outside Λ^τ.
  int operator()(const IntegerVector& v) const;
  bool operator==(const Z2Homomorphism& other) const {
    return basis_ == other.basis_ && values_ == other.values_;
  }

 private:
  IntegerMatrix basis_;
  std::vector<int> values_;
};

/// Echelon basis of Λ^τ as matrix rows.
IntegerMatrix invariant_basis(const AntiSymplecticInvolution& tau);

/// w(L)([μ]) on Λ^τ: the (-1)-exponent of α on Λ^τ plus E(2μ, ·) mod 2.
/// Throws NotRealError when the datum is not τ-real.
Z2Homomorphism w_class(const AHDatum& datum, const AntiSymplecticInvolution& tau,
                       const RealComponent& component);

/// E(λ, τλ) mod 2.
int norm_value(const AHDatum& datum, const AntiSymplecticInvolution& tau,
               const IntegerVector& lambda);

struct SWRow {
  RealComponent component;
  std::vector<int> row;           // values on the Λ^τ basis
  std::vector<int> circleValues;  // values on the circle classes
};

struct SWTable {
  RealCurveModel model;
  QuadraticFormZ2 form;
  std::vector<IntegerVector> invariantBasis;
  std::vector<SWRow> rows;
  /// s_i = ⟨w₁(κ^ι), [C_i]⟩ = q([C_i]₂) + 1.
  std::vector<int> spinData;
};

/// Throws EmptyRealLocusError for n = 0, NotRealError for a non-real form,
/// and VerificationFailure if the built-in cross-checks disagree.
SWTable sw_table(const RealCurveModel& model, const QuadraticFormZ2& q);

/// Rebuilds row [0] on the Λ^τ basis from circle-class values and norm values
/// on (1 - ι*)Λ alone.
std::vector<int> reconstruct_row_zero(const SWTable& table);

}  // namespace ktheta
