#include "ktheta/sweeps.hpp"

#include <cstdlib>
#include <stdexcept>

#include <omp.h>

namespace ktheta::sweeps {

namespace {

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Digits of idx in base (2 bound + 1), shifted to [-bound, bound].
void decode_box(std::uint64_t idx, int bound, std::size_t len, std::int64_t* out) {
  const std::uint64_t base = static_cast<std::uint64_t>(2 * bound + 1);
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = static_cast<std::int64_t>(idx % base) - bound;
    idx /= base;
  }
}

std::int64_t symplectic(int g, const std::int64_t* x, const std::int64_t* y) {
  std::int64_t acc = 0;
  for (int i = 0; i < g; ++i) acc += x[i] * y[g + i] - x[g + i] * y[i];
  return acc;
}

int odd(std::int64_t x) { return static_cast<int>(x & 1); }

std::uint64_t zero_count(const QuadraticFormZ2& q) {
  const std::uint64_t total = std::uint64_t{1} << (2 * q.genus());
  std::uint64_t zeros = 0;
  for (std::uint64_t x = 0; x < total; ++x) zeros += q.eval(x) == 0;
  return zeros;
}

}  // namespace

ArfCensus arf_census(int genus, Mode mode) {
  const std::uint64_t total = theta_count(genus);
  const std::uint64_t expectEven = (total >> 1) + ((std::uint64_t{1} << genus) >> 1);
  const std::uint64_t expectOdd = (total >> 1) - ((std::uint64_t{1} << genus) >> 1);
  // g = 0: a single form with one zero, Arf 0.
  const std::uint64_t evenZeros = genus == 0 ? 1 : expectEven;
  std::uint64_t even = 0, odd = 0, bad = 0;
  auto body = [&](std::uint64_t b, std::uint64_t& ev, std::uint64_t& od, std::uint64_t& mis) {
    const QuadraticFormZ2 q(genus, b);
    const int a = q.arf();
    (a == 0 ? ev : od) += 1;
    const std::uint64_t zeros = zero_count(q);
    if (zeros != (a == 0 ? evenZeros : expectOdd)) ++mis;
  };
  const auto n = static_cast<std::int64_t>(total);
  if (mode == Mode::Parallel) {
#pragma omp parallel for reduction(+ : even, odd, bad) schedule(static)
    for (std::int64_t b = 0; b < n; ++b) body(static_cast<std::uint64_t>(b), even, odd, bad);
  } else {
    for (std::int64_t b = 0; b < n; ++b) body(static_cast<std::uint64_t>(b), even, odd, bad);
  }
  return ArfCensus{even, odd, bad};
}

std::uint64_t distinct_theta_count(int genus, Mode mode) {
  const std::uint64_t total = theta_count(genus);
  std::vector<unsigned char> seen(total, 0);
  if (mode == Mode::Parallel) {
#pragma omp parallel
    {
      const auto threads = static_cast<std::uint64_t>(omp_get_num_threads());
      const auto id = static_cast<std::uint64_t>(omp_get_thread_num());
      const std::uint64_t chunk = (total + threads - 1) / threads;
      for (const auto& q : enumerate_theta_range(genus, id * chunk, (id + 1) * chunk))
        seen[q.basis_values()] = 1;
    }
  } else {
    for (const auto& q : enumerate_theta(genus)) seen[q.basis_values()] = 1;
  }
  std::uint64_t count = 0;
  for (auto s : seen) count += s;
  return count;
}

std::uint64_t riemann_mumford_violations(int genus, Mode mode) {
  const std::uint64_t total = theta_count(genus);
  std::uint64_t bad = 0;
  auto body = [&](std::uint64_t b) {
    const QuadraticFormZ2 q(genus, b);
    std::uint64_t local = 0;
    for (std::uint64_t x = 0; x < total; ++x)
      for (std::uint64_t y = 0; y < total; ++y)
        if (q.eval(x ^ y) != (q.eval(x) ^ q.eval(y) ^ pairing_mod2(genus, x, y))) ++local;
    return local;
  };
  const auto n = static_cast<std::int64_t>(total);
  if (mode == Mode::Parallel) {
#pragma omp parallel for reduction(+ : bad) schedule(dynamic)
    for (std::int64_t b = 0; b < n; ++b) bad += body(static_cast<std::uint64_t>(b));
  } else {
    for (std::int64_t b = 0; b < n; ++b) bad += body(static_cast<std::uint64_t>(b));
  }
  return bad;
}

CoherenceCounts coherence_sweep(const CoherenceInput& in, int bound, Mode mode) {
  const int g = in.genus;
  const std::size_t len = static_cast<std::size_t>(2 * g);
  const std::size_t k = in.invariantRank;
  if (in.iotaStar.size() != len * len || in.invariantBasis.size() != k * len)
    throw std::invalid_argument("coherence_sweep: malformed input");
  std::vector<std::size_t> pivots(k);
  for (std::size_t r = 0; r < k; ++r) {
    std::size_t p = 0;
    while (p < len && in.invariantBasis[r * len + p] == 0) ++p;
    if (p == len) throw std::invalid_argument("coherence_sweep: zero basis row");
    pivots[r] = p;
  }
  const std::uint64_t total = ipow(static_cast<std::uint64_t>(2 * bound + 1), 2 * g);
  std::uint64_t normBad = 0, relationBad = 0;

  auto body = [&](std::uint64_t idx, std::uint64_t& nb, std::uint64_t& eb) {
    std::int64_t lambda[64], iota[64], tauL[64], v[64], rest[64], coords[64];
    decode_box(idx, bound, len, lambda);
    for (std::size_t i = 0; i < len; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < len; ++j) s += in.iotaStar[i * len + j] * lambda[j];
      iota[i] = s;
      tauL[i] = -s;
      v[i] = lambda[i] + tauL[i];
    }
    const int norm = odd(symplectic(g, lambda, tauL));
    // Coordinates of λ + τλ in the echelon basis of Λ^τ.
    for (std::size_t i = 0; i < len; ++i) rest[i] = v[i];
    for (std::size_t r = 0; r < k; ++r) {
      const std::int64_t piv = in.invariantBasis[r * len + pivots[r]];
      if (rest[pivots[r]] % piv != 0) {  // λ + τλ escaped Λ^τ: the basis is wrong
        ++nb;
        return;
      }
      coords[r] = rest[pivots[r]] / piv;
      for (std::size_t j = 0; j < len; ++j) rest[j] -= coords[r] * in.invariantBasis[r * len + j];
    }
    for (const auto& row : in.rows) {
      int value = 0;
      for (std::size_t r = 0; r < k; ++r) value ^= row[r] & odd(coords[r]);
      if (value != norm) ++nb;
    }
    // Norm relation in ι* terms: w([0])(λ - ι*λ) against ⟨λ, -ι*λ⟩.
    std::int64_t minusIota[64];
    for (std::size_t i = 0; i < len; ++i) minusIota[i] = -iota[i];
    const int rhs = odd(symplectic(g, lambda, minusIota));
    int lhs = 0;
    if (!in.rows.empty())
      for (std::size_t r = 0; r < k; ++r) lhs ^= in.rows.front()[r] & odd(coords[r]);
    if (lhs != rhs) ++eb;
  };

  const auto n = static_cast<std::int64_t>(total);
  if (mode == Mode::Parallel) {
#pragma omp parallel for reduction(+ : normBad, relationBad) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) body(static_cast<std::uint64_t>(i), normBad, relationBad);
  } else {
    for (std::int64_t i = 0; i < n; ++i) body(static_cast<std::uint64_t>(i), normBad, relationBad);
  }
  return CoherenceCounts{total * in.rows.size(), normBad, relationBad};
}

std::uint64_t two_route_violations(int genus, int bound, Mode mode) {
  const std::size_t len = static_cast<std::size_t>(2 * genus);
  const std::uint64_t boxSize = ipow(static_cast<std::uint64_t>(2 * bound + 1), 2 * genus);
  const std::uint64_t forms = theta_count(genus);
  std::uint64_t bad = 0;

  auto body = [&](std::uint64_t idx) {
    const QuadraticFormZ2 q(genus, idx / boxSize);
    std::int64_t lambda[64], x[64];
    decode_box(idx % boxSize, bound, len, lambda);
    Bits reduced = 0;
    for (std::size_t i = 0; i < len; ++i)
      if (odd(lambda[i])) reduced |= Bits{1} << i;
    const int formula = q.eval(reduced);

    // Unit steps taken round-robin across coordinates.
    for (std::size_t i = 0; i < len; ++i) x[i] = 0;
    int exponent = 0;
    bool moved = true;
    while (moved) {
      moved = false;
      for (std::size_t i = 0; i < len; ++i) {
        if (x[i] == lambda[i]) continue;
        const std::int64_t step = lambda[i] > x[i] ? 1 : -1;
        // E_std(x, ±b_i) mod 2 is the partner coordinate of x.
        const std::size_t partner = i < static_cast<std::size_t>(genus) ? i + genus : i - genus;
        exponent ^= q.basis_value(static_cast<int>(i)) ^ odd(x[partner]);
        x[i] += step;
        moved = true;
      }
    }
    return static_cast<std::uint64_t>(formula != exponent);
  };

  const auto n = static_cast<std::int64_t>(forms * boxSize);
  if (mode == Mode::Parallel) {
#pragma omp parallel for reduction(+ : bad) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) bad += body(static_cast<std::uint64_t>(i));
  } else {
    for (std::int64_t i = 0; i < n; ++i) bad += body(static_cast<std::uint64_t>(i));
  }
  return bad;
}

}  // namespace ktheta::sweeps
