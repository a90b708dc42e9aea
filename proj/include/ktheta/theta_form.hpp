#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ktheta/integer_matrix.hpp"

namespace ktheta {

struct RealCurveModel;

/// A vector of H₁(C, ℤ₂) ≅ ℤ₂^{2g}: bit i is the e_{i+1} coordinate for
/// i < g and the f_{i-g+1} coordinate for g <= i < 2g.
using Bits = std::uint64_t;

inline constexpr int kMaxFormGenus = 31;

inline int parity(Bits x) { return __builtin_parityll(x); }

/// Mod-2 intersection pairing x·y of the standard symplectic basis.
int pairing_mod2(int genus, Bits x, Bits y);

/// Reduction of an integer lattice vector mod 2.
Bits reduce_mod2(const IntegerVector& v);

/// Integer matrix reduced mod 2 and stored column-wise as bitmasks.
class Gf2Matrix {
 public:
  explicit Gf2Matrix(const IntegerMatrix& m);
  Bits apply(Bits x) const;
  std::size_t size() const { return columns_.size(); }

 private:
  std::vector<Bits> columns_;
};

/// A ℤ₂-valued quadratic form with polar form the mod-2 intersection pairing,
/// stored by its values on the 2g basis vectors.
class QuadraticFormZ2 {
 public:
  QuadraticFormZ2() = default;
  QuadraticFormZ2(int genus, Bits basisValues);
  /// From explicit bits (q(e_1), ..., q(e_g), q(f_1), ..., q(f_g)).
  static QuadraticFormZ2 from_values(const std::vector<int>& values);

  int genus() const { return genus_; }
  Bits basis_values() const { return basis_; }
  int basis_value(int index) const { return static_cast<int>((basis_ >> index) & 1U); }
  std::vector<int> values() const;

  /// q(x) = Σ x_i q(b_i) + Σ_{i<j} x_i x_j (b_i·b_j).
  int eval(Bits x) const {
    const Bits mask = (Bits{1} << genus_) - 1;
    return parity(x & basis_) ^ parity((x & mask) & (x >> genus_));
  }
  /// Throws ValidationError on a length mismatch.
  int eval(const std::vector<int>& x) const;

  int arf() const;
  std::string to_string() const;  // comma-separated basis bits

  bool operator==(const QuadraticFormZ2& other) const = default;

 private:
  int genus_ = 0;
  Bits basis_ = 0;
};

using ThetaCharacteristic = QuadraticFormZ2;

/// Number of theta characteristics, 2^{2g}.
std::uint64_t theta_count(int genus);

/// All 2^{2g} forms, basis values read as a binary counter.
std::vector<QuadraticFormZ2> enumerate_theta(int genus);
/// Forms with counter index in [begin, end); any partition gives the same union.
std::vector<QuadraticFormZ2> enumerate_theta_range(int genus, std::uint64_t begin,
                                                   std::uint64_t end);

int arf(const QuadraticFormZ2& q);

/// q'(x) = q(x) + x·η.
QuadraticFormZ2 translate(const QuadraticFormZ2& q, Bits eta);

/// q(T₂ x) = q(x) for all x, with T₂ = ι* mod 2.
bool is_real_theta(const QuadraticFormZ2& q, const RealCurveModel& model);

/// All forms that are real for the model, in enumeration order.
std::vector<QuadraticFormZ2> real_theta(const RealCurveModel& model);

/// η with T₂ η = η.
std::vector<Bits> invariant_classes(const RealCurveModel& model);

}  // namespace ktheta
