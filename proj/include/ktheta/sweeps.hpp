#pragma once

// Exhaustive sweeps behind the census and coherence checks. Every kernel has a
// serial reference and an OpenMP version; both must return identical results.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ktheta/klein_model.hpp"
#include "ktheta/theta_form.hpp"

namespace ktheta::sweeps {

enum class Mode { Serial, Parallel };

struct ArfCensus {
  std::uint64_t even = 0;
  std::uint64_t odd = 0;
  /// Forms whose zero count disagrees with 2^{2g-1} + (-1)^Arf 2^{g-1}.
  std::uint64_t zeroCountMismatches = 0;
  bool operator==(const ArfCensus&) const = default;
};

/// Arf invariants of all 2^{2g} forms, each cross-checked by counting zeros.
ArfCensus arf_census(int genus, Mode mode);

/// Number of distinct forms produced by enumerate_theta-style partitioned
/// enumeration (chunks of the index range handled independently).
std::uint64_t distinct_theta_count(int genus, Mode mode);

/// Violations of q(x + y) = q(x) + q(y) + x·y over all forms and pairs.
std::uint64_t riemann_mumford_violations(int genus, Mode mode);

/// Small dense mirror of the exact data a coherence sweep needs.
struct CoherenceInput {
  int genus = 0;
  std::vector<std::int64_t> iotaStar;  // 2g x 2g row-major
  std::vector<std::int64_t> invariantBasis;  // k x 2g echelon rows of Λ^τ
  std::size_t invariantRank = 0;
  std::vector<std::vector<int>> rows;        // one row per component, on the Λ^τ basis
  std::vector<std::vector<std::int64_t>> twiceMu;
};

struct CoherenceCounts {
  std::uint64_t checked = 0;
  /// norm_value(λ) != w([μ])(λ + τλ)
  std::uint64_t normMismatches = 0;
  /// w([0])(λ - ι*λ) != ⟨λ, -ι*λ⟩ mod 2
  std::uint64_t normRelationMismatches = 0;
  bool operator==(const CoherenceCounts&) const = default;
};

/// Sweeps every λ with coefficients in [-bound, bound]^{2g}.
CoherenceCounts coherence_sweep(const CoherenceInput& input, int bound, Mode mode);

/// Formula route (-1)^{q(λ mod 2)} against the semi-character recursion
/// α(x + s) = α(x) α(s) (-1)^{E(x, s)} built one unit step at a time, for
/// every form of the genus and every λ in [-bound, bound]^{2g}. Returns the
/// number of disagreements.
std::uint64_t two_route_violations(int genus, int bound, Mode mode);

}  // namespace ktheta::sweeps
