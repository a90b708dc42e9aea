#include "ktheta/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace ktheta {

namespace {

// Floor division for exact canonical reduction (mpz_class '/' truncates).
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::size_t pivot_column(const IntegerMatrix& h, std::size_t row) {
  for (std::size_t j = 0; j < h.cols(); ++j)
    if (sgn(h(row, j)) != 0) return j;
  return h.cols();
}

}  // namespace

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  const std::size_t k = std::min(D.rows(), D.cols());
  d.reserve(k);
  for (std::size_t i = 0; i < k; ++i) d.push_back(D(i, i));
  return d;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal())
    if (sgn(d) != 0) ++r;
  return r;
}

SmithForm smith_normal_form(const IntegerMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntegerMatrix a = m;
  IntegerMatrix u = IntegerMatrix::identity(rows);
  IntegerMatrix v = IntegerMatrix::identity(cols);
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    bool exhausted = false;
    while (true) {
      // Smallest non-zero entry of the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (sgn(a(i, j)) == 0) continue;
          if (pi == rows || mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) {
        exhausted = true;
        break;
      }
      a.swap_rows(t, pi);
      u.swap_rows(t, pi);
      a.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a(i, t)) == 0) continue;
        const Integer q = a(i, t) / a(t, t);
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (sgn(a(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a(t, j)) == 0) continue;
        const Integer q = a(t, j) / a(t, t);
        a.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (sgn(a(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce d_t | every remaining entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            a.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (exhausted) break;
    if (sgn(a(t, t)) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return SmithForm{std::move(u), std::move(a), std::move(v)};
}

IntegerMatrix hermite_rows(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  const std::size_t rows = a.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < rows; ++c) {
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a(r, c).get_mpz_t(),
                 a(i, c).get_mpz_t());
      const Integer ra = a(r, c) / g;
      const Integer ib = a(i, c) / g;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const Integer top = s * a(r, j) + t * a(i, j);
        const Integer bottom = ib * a(r, j) - ra * a(i, j);
        a(r, j) = top;
        a(i, j) = bottom;
      }
    }
    if (sgn(a(r, c)) == 0) continue;
    if (sgn(a(r, c)) < 0) a.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      const Integer q = floor_div(a(i, c), a(r, c));
      a.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  IntegerMatrix h(r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) h(i, j) = a(i, j);
  return h;
}

std::size_t rank(const IntegerMatrix& m) { return hermite_rows(m).rows(); }

IntegerVector FiniteQuotient::reduce(const IntegerVector& v) const {
  if (infiniteIndex) throw std::logic_error("reduce: quotient is infinite");
  if (v.size() != ambientRank) throw std::invalid_argument("reduce: size mismatch");
  IntegerVector out = v;
  for (std::size_t i = 0; i < hermiteBasis.rows(); ++i) {
    const Integer q = floor_div(out[i], hermiteBasis(i, i));
    if (sgn(q) == 0) continue;
    for (std::size_t j = i; j < ambientRank; ++j) out[j] -= q * hermiteBasis(i, j);
  }
  return out;
}

bool FiniteQuotient::equivalent(const IntegerVector& a, const IntegerVector& b) const {
  return reduce(a) == reduce(b);
}

FiniteQuotient quotient_group(const std::vector<IntegerVector>& sublatticeGenerators,
                              std::size_t ambientRank, std::size_t enumerationLimit) {
  FiniteQuotient q;
  q.ambientRank = ambientRank;
  const IntegerMatrix gens = IntegerMatrix::from_rows(sublatticeGenerators, ambientRank);
  q.hermiteBasis = hermite_rows(gens);
  if (q.hermiteBasis.rows() < ambientRank) {
    q.infiniteIndex = true;
    q.order = 0;
    return q;
  }
  for (const auto& d : smith_normal_form(gens).diagonal())
    if (d > 1) q.elementaryDivisors.push_back(d);
  q.order = 1;
  for (std::size_t i = 0; i < ambientRank; ++i) q.order *= q.hermiteBasis(i, i);

  if (q.order > Integer(static_cast<unsigned long>(enumerationLimit))) return q;
  // Box enumeration in lexicographic order: the last coordinate varies fastest.
  IntegerVector current(ambientRank, Integer(0));
  while (true) {
    q.cosetRepresentatives.push_back(current);
    std::size_t k = ambientRank;
    while (k > 0) {
      --k;
      current[k] += 1;
      if (current[k] < q.hermiteBasis(k, k)) break;
      current[k] = 0;
      if (k == 0) return q;
    }
    if (ambientRank == 0) return q;
  }
}

std::optional<IntegerVector> solve_integer(const std::vector<IntegerVector>& columns,
                                           const IntegerVector& v) {
  const std::size_t n = v.size();
  if (columns.empty()) {
    if (is_zero(v)) return IntegerVector{};
    return std::nullopt;
  }
  const IntegerMatrix g = IntegerMatrix::from_columns(columns, n);
  const SmithForm snf = smith_normal_form(g);
  const IntegerVector uv = snf.U * v;
  IntegerVector y(g.cols(), Integer(0));
  for (std::size_t i = 0; i < n; ++i) {
    const Integer d = i < g.cols() ? snf.D(i, i) : Integer(0);
    if (sgn(d) == 0) {
      if (sgn(uv[i]) != 0) return std::nullopt;
      continue;
    }
    if (!mpz_divisible_p(uv[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    y[i] = uv[i] / d;
  }
  return snf.V * y;
}

std::optional<IntegerVector> echelon_coordinates(const IntegerMatrix& echelonBasis,
                                                 const IntegerVector& v) {
  if (v.size() != echelonBasis.cols()) throw std::invalid_argument("echelon_coordinates: size");
  IntegerVector rest = v;
  IntegerVector coords(echelonBasis.rows(), Integer(0));
  for (std::size_t i = 0; i < echelonBasis.rows(); ++i) {
    const std::size_t p = pivot_column(echelonBasis, i);
    if (p == echelonBasis.cols()) continue;
    if (!mpz_divisible_p(rest[p].get_mpz_t(), echelonBasis(i, p).get_mpz_t())) return std::nullopt;
    coords[i] = rest[p] / echelonBasis(i, p);
    for (std::size_t j = p; j < rest.size(); ++j) rest[j] -= coords[i] * echelonBasis(i, j);
  }
  if (!is_zero(rest)) return std::nullopt;
  return coords;
}

bool is_saturated(const std::vector<IntegerVector>& basis, std::size_t ambientRank) {
  const SmithForm snf = smith_normal_form(IntegerMatrix::from_rows(basis, ambientRank));
  for (const auto& d : snf.diagonal())
    if (sgn(d) != 0 && d != 1) return false;
  return true;
}

IntegerMatrix standard_symplectic_form(std::size_t genus) {
  IntegerMatrix e(2 * genus, 2 * genus);
  for (std::size_t i = 0; i < genus; ++i) {
    e(i, genus + i) = 1;
    e(genus + i, i) = -1;
  }
  return e;
}

SymplecticLattice::SymplecticLattice(std::size_t g)
    : genus(g), cupForm(standard_symplectic_form(g)) {}

bool AntiSymplecticInvolution::satisfies_axioms(const IntegerMatrix& t) {
  if (t.rows() != t.cols() || t.rows() % 2 != 0) return false;
  const IntegerMatrix e = standard_symplectic_form(t.rows() / 2);
  return t * t == IntegerMatrix::identity(t.rows()) && t.transpose() * e * t == -e;
}

AntiSymplecticInvolution::AntiSymplecticInvolution(IntegerMatrix t) : t_(std::move(t)) {
  if (!satisfies_axioms(t_))
    throw std::invalid_argument("matrix is not an anti-symplectic involution: " + t_.to_string());
}

AntiSymplecticInvolution AntiSymplecticInvolution::negated() const {
  return AntiSymplecticInvolution(-t_);
}

std::vector<IntegerVector> eigenlattice(const IntegerMatrix& t, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("eigenlattice: sign must be +-1");
  const std::size_t n = t.rows();
  IntegerMatrix a = t;
  for (std::size_t i = 0; i < n; ++i) a(i, i) -= sign;
  const SmithForm snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  std::vector<IntegerVector> kernel;
  for (std::size_t j = r; j < n; ++j) kernel.push_back(snf.V.column(j));
  const IntegerMatrix h = hermite_rows(IntegerMatrix::from_rows(kernel, n));
  std::vector<IntegerVector> basis;
  for (std::size_t i = 0; i < h.rows(); ++i) basis.push_back(h.row(i));
  return basis;
}

std::vector<IntegerVector> eigenlattice(const AntiSymplecticInvolution& t, int sign) {
  return eigenlattice(t.matrix(), sign);
}

}  // namespace ktheta
