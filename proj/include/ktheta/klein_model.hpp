#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ktheta/integer_matrix.hpp"
#include "ktheta/lattice.hpp"

namespace ktheta {

/// Topological type (g, n, a) of a Klein surface: genus, number of real
/// circles, and whether the quotient C/<ι> is non-orientable (a = 1).
struct TopologicalType {
  int g = 0;
  int n = 0;
  int a = 0;

  auto operator<=>(const TopologicalType&) const = default;
  std::string to_string() const;
};

/// Name of the first violated condition, or nullopt for a valid type.
std::optional<std::string> type_violation(int g, int n, int a);
bool validate_type(int g, int n, int a);
inline bool validate_type(const TopologicalType& t) { return validate_type(t.g, t.n, t.a); }

/// All valid types with g <= gMax, sorted by (g, a, n).
std::vector<TopologicalType> enumerate_types(int gMax);

struct ModelOptions {
  /// Coefficient bound of the circle-class search in eigenlattice coordinates.
  int searchBound = 2;
};

/// Standard model of ι* on H¹(C, ℤ): [[I_g, H], [0, -I_g]] plus circle classes.
struct RealCurveModel {
  TopologicalType type;
  IntegerMatrix iotaStar;
  IntegerMatrix hBlock;
  std::vector<IntegerVector> circleClasses;

  std::size_t genus() const { return static_cast<std::size_t>(type.g); }
  std::size_t rank() const { return 2 * genus(); }
  AntiSymplecticInvolution involution() const { return AntiSymplecticInvolution(iotaStar); }
};

/// Rank of an integer matrix reduced mod 2.
std::size_t rank_mod2(const IntegerMatrix& m);

/// The normal-form H block for a type: diag(1..1,0..0) for a = 1, hyperbolic
/// [[0,1],[1,0]] blocks for a = 0, of mod-2 rank g + 1 - n.
IntegerMatrix normal_form_h_block(const TopologicalType& type);
IntegerMatrix involution_from_h_block(const IntegerMatrix& h);

/// Throws ValidationError for invalid types and EmptyRealLocusError for n = 0.
/// Throws std::runtime_error when the circle-class search is exhausted.
RealCurveModel standard_model(const TopologicalType& type, const ModelOptions& options = {});

/// Checks the model invariants other than circle-class generation; returns the
/// first failure description, or nullopt.
std::optional<std::string> model_violation(const RealCurveModel& model);

/// Circle classes together with (1 - ι*)Λ generate the (-ι*)-eigenlattice.
bool circle_generation_check(const RealCurveModel& model);

/// τ = -ι*, the involution acting on the Picard lattice.
AntiSymplecticInvolution picard_involution(const RealCurveModel& model);

}  // namespace ktheta
