#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ktheta/integer_matrix.hpp"

namespace ktheta {

/// U * M * V = D with U, V unimodular and D diagonal, d_i >= 0, d_i | d_{i+1}.
struct SmithForm {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;

  std::vector<Integer> diagonal() const;
  std::size_t rank() const;
};

SmithForm smith_normal_form(const IntegerMatrix& m);

/// Row-style Hermite normal form of the row span: echelon rows with positive
/// pivots, entries above each pivot reduced into [0, pivot). Zero rows dropped.
IntegerMatrix hermite_rows(const IntegerMatrix& m);

std::size_t rank(const IntegerMatrix& m);

/// ℤ^ambientRank / span(generators).
struct FiniteQuotient {
  std::size_t ambientRank = 0;
  /// Non-unit invariant factors in divisibility order; empty for the trivial group.
  std::vector<Integer> elementaryDivisors;
  /// Lexicographically minimal non-negative representatives, in lexicographic order.
  /// Filled only when the quotient is finite and its order is within the
  /// enumeration limit passed to quotient_group.
  std::vector<IntegerVector> cosetRepresentatives;
  Integer order = 1;
  bool infiniteIndex = false;
  /// Hermite basis of the sublattice, used for canonical reduction.
  IntegerMatrix hermiteBasis;

  /// Canonical representative of v + span(generators). Requires a finite quotient.
  IntegerVector reduce(const IntegerVector& v) const;
  bool equivalent(const IntegerVector& a, const IntegerVector& b) const;
};

inline constexpr std::size_t kDefaultEnumerationLimit = std::size_t{1} << 20;

FiniteQuotient quotient_group(const std::vector<IntegerVector>& sublatticeGenerators,
                              std::size_t ambientRank,
                              std::size_t enumerationLimit = kDefaultEnumerationLimit);

/// Integer solution x of G x = v, where G has the given columns; nullopt if none.
std::optional<IntegerVector> solve_integer(const std::vector<IntegerVector>& columns,
                                           const IntegerVector& v);

/// Coordinates of v in an echelon basis (rows of hermite_rows output); nullopt
/// when v is outside the span.
std::optional<IntegerVector> echelon_coordinates(const IntegerMatrix& echelonBasis,
                                                 const IntegerVector& v);

/// True when ℤ^n / span(basis) is torsion-free.
bool is_saturated(const std::vector<IntegerVector>& basis, std::size_t ambientRank);

/// The cup form E_std = [[0, I_g], [-I_g, 0]] on e_1..e_g, f_1..f_g.
struct SymplecticLattice {
  std::size_t genus = 0;
  IntegerMatrix cupForm;

  explicit SymplecticLattice(std::size_t g);
  std::size_t rank() const { return 2 * genus; }
};

IntegerMatrix standard_symplectic_form(std::size_t genus);

/// Integer matrix T with T² = I and Tᵗ E_std T = -E_std.
class AntiSymplecticInvolution {
 public:
  /// Throws std::invalid_argument if either axiom fails.
  explicit AntiSymplecticInvolution(IntegerMatrix t);

  static bool satisfies_axioms(const IntegerMatrix& t);

  const IntegerMatrix& matrix() const { return t_; }
  std::size_t genus() const { return t_.rows() / 2; }
  std::size_t rank() const { return t_.rows(); }
  AntiSymplecticInvolution negated() const;

 private:
  IntegerMatrix t_;
};

/// Basis (Hermite rows) of the saturated sublattice {v : T v = sign v}.
std::vector<IntegerVector> eigenlattice(const IntegerMatrix& t, int sign);
std::vector<IntegerVector> eigenlattice(const AntiSymplecticInvolution& t, int sign);

}  // namespace ktheta
