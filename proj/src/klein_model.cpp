#include "ktheta/klein_model.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>

#include "ktheta/errors.hpp"

namespace ktheta {

namespace {

using Small = std::vector<std::int64_t>;

// Incremental row-echelon basis over ℤ₂ for rank tests on bitmasks.
class Gf2Span {
 public:
  bool insert(std::uint64_t v) {
    for (auto b : basis_) v = std::min(v, v ^ b);
    if (v == 0) return false;
    basis_.push_back(v);
    std::sort(basis_.begin(), basis_.end(), std::greater<>());
    return true;
  }
  bool contains(std::uint64_t v) const {
    for (auto b : basis_) v = std::min(v, v ^ b);
    return v == 0;
  }
  std::size_t rank() const { return basis_.size(); }

 private:
  std::vector<std::uint64_t> basis_;
};

std::uint64_t mod2_mask(const IntegerVector& coords) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (mpz_odd_p(coords[i].get_mpz_t())) m |= std::uint64_t{1} << i;
  return m;
}

struct Candidate {
  IntegerVector coords;  // in eigenlattice coordinates
  IntegerVector ambient;
  std::size_t support = 0;
  Integer maxAbs = 0;
};

bool preferred(const Candidate& x, const Candidate& y) {
  if (x.support != y.support) return x.support < y.support;
  if (x.maxAbs != y.maxAbs) return x.maxAbs < y.maxAbs;
  return x.ambient > y.ambient;
}

// Coefficient vectors with exactly `weight` non-zero entries in [-bound, bound].
void coefficient_vectors(std::size_t dim, std::size_t weight, int bound,
                         std::vector<std::vector<int>>& out) {
  std::vector<int> c(dim, 0);
  std::vector<std::size_t> idx(weight);
  // Iterate supports (combinations) and then values on the support.
  std::vector<bool> select(dim, false);
  std::fill(select.begin(), select.begin() + static_cast<std::ptrdiff_t>(weight), true);
  do {
    std::size_t k = 0;
    for (std::size_t i = 0; i < dim; ++i)
      if (select[i]) idx[k++] = i;
    std::vector<int> vals(weight, -bound);
    while (true) {
      bool ok = true;
      for (int v : vals) ok = ok && v != 0;
      if (ok) {
        std::fill(c.begin(), c.end(), 0);
        for (std::size_t t = 0; t < weight; ++t) c[idx[t]] = vals[t];
        out.push_back(c);
      }
      std::size_t t = 0;
      while (t < weight && vals[t] == bound) vals[t++] = -bound;
      if (t == weight) break;
      ++vals[t];
    }
  } while (std::prev_permutation(select.begin(), select.end()));
}

}  // namespace

std::string TopologicalType::to_string() const {
  return "(" + std::to_string(g) + "," + std::to_string(n) + "," + std::to_string(a) + ")";
}

std::optional<std::string> type_violation(int g, int n, int a) {
  if (g < 0 || n < 0) return "g and n must be non-negative";
  if (a != 0 && a != 1) return "a must be 0 or 1";
  if (a == 0) {
    if (n < 1) return "a = 0 requires 1 <= n";
    if (n > g + 1) return "a = 0 requires n <= g + 1";
    if ((g + 1 - n) % 2 != 0) return "a = 0 requires the parity condition g + 1 - n = 0 (mod 2)";
  } else if (n > g) {
    return "a = 1 requires n <= g";
  }
  return std::nullopt;
}

bool validate_type(int g, int n, int a) { return !type_violation(g, n, a).has_value(); }

std::vector<TopologicalType> enumerate_types(int gMax) {
  std::vector<TopologicalType> out;
  for (int g = 0; g <= gMax; ++g)
    for (int a = 0; a <= 1; ++a)
      for (int n = 0; n <= g + 1; ++n)
        if (validate_type(g, n, a)) out.push_back({g, n, a});
  return out;
}

std::size_t rank_mod2(const IntegerMatrix& m) {
  std::vector<std::vector<bool>> rows(m.rows(), std::vector<bool>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = mpz_odd_p(m(i, j).get_mpz_t());
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && !rows[p][c]) ++p;
    if (p == m.rows()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && rows[i][c])
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = rows[i][j] != rows[r][j];
    ++r;
  }
  return r;
}

IntegerMatrix normal_form_h_block(const TopologicalType& type) {
  if (auto why = type_violation(type.g, type.n, type.a)) throw ValidationError(*why);
  const std::size_t g = static_cast<std::size_t>(type.g);
  const int comessatti = type.g + 1 - type.n;
  if (comessatti > type.g) throw EmptyRealLocusError("real locus empty; w undefined");
  IntegerMatrix h(g, g);
  const auto r = static_cast<std::size_t>(comessatti);
  if (type.a == 1) {
    for (std::size_t i = 0; i < r; ++i) h(i, i) = 1;
  } else {
    for (std::size_t k = 0; 2 * k + 1 < r; ++k) {
      h(2 * k, 2 * k + 1) = 1;
      h(2 * k + 1, 2 * k) = 1;
    }
  }
  return h;
}

IntegerMatrix involution_from_h_block(const IntegerMatrix& h) {
  const std::size_t g = h.rows();
  IntegerMatrix t(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    t(i, i) = 1;
    t(g + i, g + i) = -1;
    for (std::size_t j = 0; j < g; ++j) t(i, g + j) = h(i, j);
  }
  return t;
}

RealCurveModel standard_model(const TopologicalType& type, const ModelOptions& options) {
  if (auto why = type_violation(type.g, type.n, type.a)) throw ValidationError(*why);
  if (type.n == 0) throw EmptyRealLocusError("real locus empty; w undefined (n = 0)");

  RealCurveModel model;
  model.type = type;
  model.hBlock = normal_form_h_block(type);
  model.iotaStar = involution_from_h_block(model.hBlock);
  const std::size_t g = model.genus();
  const std::size_t rank2g = model.rank();
  const std::size_t needed = static_cast<std::size_t>(type.n);
  if (g == 0) {
    // Rank-0 lattice: the unique circle class is the empty vector.
    model.circleClasses.assign(needed, IntegerVector{});
    return model;
  }

  const auto anti = eigenlattice(model.iotaStar, -1);
  const IntegerMatrix antiBasis = IntegerMatrix::from_rows(anti, rank2g);
  const IntegerMatrix e = standard_symplectic_form(g);

  // Image of (1 - ι*)Λ in Λ^{-ι*} ⊗ ℤ₂.
  Gf2Span span;
  const IntegerMatrix oneMinus = IntegerMatrix::identity(rank2g) - model.iotaStar;
  for (std::size_t j = 0; j < rank2g; ++j) {
    auto coords = echelon_coordinates(antiBasis, oneMinus.column(j));
    if (!coords) throw std::logic_error("(1 - iota*) image escapes the eigenlattice");
    span.insert(mod2_mask(*coords));
  }

  std::vector<IntegerVector> chosen;
  auto cup_free = [&](const IntegerVector& v) {
    for (const auto& c : chosen)
      if (sgn(bilinear(e, c, v)) != 0) return false;
    return true;
  };

  const std::size_t generators = needed - 1;
  bool closed = false;
  for (std::size_t weight = 1; weight <= g && !closed; ++weight) {
    std::vector<std::vector<int>> coeffs;
    coefficient_vectors(g, weight, options.searchBound, coeffs);
    std::vector<Candidate> batch;
    batch.reserve(coeffs.size());
    for (const auto& c : coeffs) {
      Candidate cand;
      cand.coords.resize(g);
      for (std::size_t i = 0; i < g; ++i) cand.coords[i] = c[i];
      cand.ambient = antiBasis.transpose() * cand.coords;
      for (const auto& x : cand.ambient) {
        if (sgn(x) != 0) ++cand.support;
        if (mpz_cmpabs(x.get_mpz_t(), cand.maxAbs.get_mpz_t()) > 0) cand.maxAbs = abs(x);
      }
      batch.push_back(std::move(cand));
    }
    std::sort(batch.begin(), batch.end(), preferred);

    for (const auto& cand : batch) {
      if (!is_primitive(cand.ambient)) continue;
      if (chosen.size() < generators) {
        if (cup_free(cand.ambient) && span.insert(mod2_mask(cand.coords)))
          chosen.push_back(cand.ambient);
        if (chosen.size() < generators) continue;
        // Closure vector -(sum of generators) completes the n classes.
        IntegerVector closure(rank2g, Integer(0));
        for (const auto& c : chosen) closure = closure - c;
        if (is_primitive(closure) && cup_free(closure)) {
          chosen.push_back(closure);
          closed = true;
          break;
        }
        continue;
      }
      if (cup_free(cand.ambient) &&
          std::find(chosen.begin(), chosen.end(), cand.ambient) == chosen.end()) {
        chosen.push_back(cand.ambient);
        closed = true;
        break;
      }
    }
  }
  if (!closed || chosen.size() != needed) {
    throw std::runtime_error("circle-class search exhausted for type " + type.to_string() +
                             " (search bound " + std::to_string(options.searchBound) + ")");
  }
  model.circleClasses = std::move(chosen);
  return model;
}

std::optional<std::string> model_violation(const RealCurveModel& model) {
  const std::size_t g = model.genus();
  if (auto why = type_violation(model.type.g, model.type.n, model.type.a)) return *why;
  if (model.hBlock.rows() != g || model.hBlock.cols() != g) return "H block has wrong shape";
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      const auto& x = model.hBlock(i, j);
      if (x != model.hBlock(j, i)) return "H block is not symmetric";
      if (x != 0 && x != 1) return "H block entries must be 0/1";
    }
  if (!(model.iotaStar == involution_from_h_block(model.hBlock)))
    return "iota* is not [[I, H], [0, -I]]";
  if (!AntiSymplecticInvolution::satisfies_axioms(model.iotaStar))
    return "iota* violates T^2 = I or T^t E T = -E";
  if (rank_mod2(model.hBlock) != static_cast<std::size_t>(model.type.g + 1 - model.type.n))
    return "rank_2(H) != g + 1 - n";
  bool evenType = true;
  for (std::size_t i = 0; i < g; ++i) evenType = evenType && model.hBlock(i, i) == 0;
  if (g > 0 && model.type.a == 0 && !evenType) return "a = 0 requires an even-type H block";
  if (model.type.a == 1 && model.type.g + 1 - model.type.n > 0 && evenType)
    return "a = 1 requires an odd-type H block";
  if (model.circleClasses.size() != static_cast<std::size_t>(model.type.n))
    return "circle class count differs from n";
  if (g == 0) return std::nullopt;
  const IntegerMatrix e = standard_symplectic_form(g);
  for (std::size_t i = 0; i < model.circleClasses.size(); ++i) {
    const auto& c = model.circleClasses[i];
    if (c.size() != model.rank()) return "circle class has wrong length";
    if (!(model.iotaStar * c == -c)) return "circle class outside the (-iota*)-eigenlattice";
    if (!is_primitive(c)) return "circle class is not primitive";
    for (std::size_t j = i + 1; j < model.circleClasses.size(); ++j)
      if (sgn(bilinear(e, c, model.circleClasses[j])) != 0)
        return "circle classes have non-zero cup product";
  }
  return std::nullopt;
}

bool circle_generation_check(const RealCurveModel& model) {
  const std::size_t n = model.rank();
  const auto anti = eigenlattice(model.iotaStar, -1);
  const IntegerMatrix antiBasis = IntegerMatrix::from_rows(anti, n);
  std::vector<IntegerVector> generators;
  for (const auto& c : model.circleClasses) {
    auto coords = echelon_coordinates(antiBasis, c);
    if (!coords) return false;
    generators.push_back(*coords);
  }
  const IntegerMatrix oneMinus = IntegerMatrix::identity(n) - model.iotaStar;
  for (std::size_t j = 0; j < n; ++j) {
    auto coords = echelon_coordinates(antiBasis, oneMinus.column(j));
    if (!coords) return false;
    generators.push_back(*coords);
  }
  const auto q = quotient_group(generators, anti.size(), 1);
  return !q.infiniteIndex && q.order == 1;
}

AntiSymplecticInvolution picard_involution(const RealCurveModel& model) {
  return AntiSymplecticInvolution(-model.iotaStar);
}

}  // namespace ktheta
