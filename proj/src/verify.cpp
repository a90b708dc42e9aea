#include "ktheta/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "ktheta/analytic.hpp"
#include "ktheta/appell_humbert.hpp"
#include "ktheta/errors.hpp"
#include "ktheta/klein_model.hpp"
#include "ktheta/real_sw.hpp"
#include "ktheta/table_io.hpp"
#include "ktheta/theta_form.hpp"

namespace ktheta {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!passed) detail << "; ";
      passed = false;
      detail << what;
    }
  }
};

std::vector<RealCurveModel> models_up_to(int gMax) {
  std::vector<RealCurveModel> out;
  for (const auto& t : enumerate_types(gMax))
    if (t.n >= 1) out.push_back(standard_model(t));
  return out;
}

std::vector<std::int64_t> flatten(const IntegerMatrix& m) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& x : to_int64(m.row(i))) out.push_back(x);
  return out;
}

IntegerVector random_lattice_vector(std::mt19937_64& rng, std::size_t len, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntegerVector v(len);
  for (auto& x : v) x = dist(rng);
  return v;
}

// ±e_k: keeps |a| moderate so an absolute tolerance stays meaningful in binary64.
IntegerVector random_signed_unit(std::mt19937_64& rng, std::size_t len) {
  IntegerVector v(len, Integer(0));
  v[rng() % len] = (rng() & 1U) ? 1 : -1;
  return v;
}

// 1. #θ = 2^{2g}, g <= 6.
void theta_census(const VerifyOptions& opt, Outcome& out) {
  const auto start = Clock::now();
  for (int g = 0; g <= 6; ++g) {
    const std::uint64_t expected = std::uint64_t{1} << (2 * g);
    out.require(enumerate_theta(g).size() == expected, "enumerate_theta size wrong at g=" + std::to_string(g));
    out.require(sweeps::distinct_theta_count(g, opt.mode) == expected,
                "distinct form count wrong at g=" + std::to_string(g));
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  out.require(secs < 5.0, "runtime " + format_double(secs) + " s exceeds 5 s");
  out.detail << (out.passed ? "2^{2g} distinct forms for g = 0..6" : "");
}

// 2. Genus <= 1 types are exactly the five classical examples.
void type_census(const VerifyOptions&, Outcome& out) {
  const std::vector<TopologicalType> expected{{0, 1, 0}, {0, 0, 1}, {1, 2, 0}, {1, 0, 1}, {1, 1, 1}};
  const auto got = enumerate_types(1);
  std::string list;
  for (const auto& t : got) list += t.to_string();
  out.require(got == expected, "enumerate_types(1) = " + list);
  out.detail << (out.passed ? "types " + list : "");
}

// 3. Even/odd census, g <= 4.
void arf_census_check(const VerifyOptions& opt, Outcome& out) {
  for (int g = 0; g <= 4; ++g) {
    const std::uint64_t four = std::uint64_t{1} << (2 * g), two = std::uint64_t{1} << g;
    const auto c = sweeps::arf_census(g, opt.mode);
    out.require(c.even == (four + two) / 2 && c.odd == (four - two) / 2,
                "census g=" + std::to_string(g) + " even=" + std::to_string(c.even) +
                    " odd=" + std::to_string(c.odd));
    out.require(c.zeroCountMismatches == 0, "zero-count characterization fails at g=" + std::to_string(g));
  }
  out.detail << (out.passed ? "2^{g-1}(2^g +- 1) for g = 0..4" : "");
}

// 4. Component count 2^{n-1}, g <= 8.
void component_count(const VerifyOptions&, Outcome& out) {
  const auto start = Clock::now();
  std::size_t checked = 0;
  for (const auto& t : enumerate_types(8)) {
    if (t.n < 1) continue;
    const RealCurveModel model = standard_model(t);
    const ComponentGroup group(picard_involution(model));
    const std::size_t expected = std::size_t{1} << (t.n - 1);
    out.require(group.size() == expected, "type " + t.to_string() + " has " +
                                              std::to_string(group.size()) + " components");
    // Independent count from the H block: 2^{g - rank_2 H}.
    const std::size_t fromH = std::size_t{1} << (t.g - static_cast<int>(rank_mod2(model.hBlock)));
    out.require(fromH == expected, "H-block count mismatch for " + t.to_string());
    ++checked;
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  out.require(secs < 30.0, "runtime " + format_double(secs) + " s exceeds 30 s");
  out.detail << (out.passed ? std::to_string(checked) + " types with n >= 1, g <= 8" : "");
}

// 5. Coherence of w, coset independence and the norm relation, g <= 3.
void coherence(const VerifyOptions& opt, Outcome& out) {
  std::uint64_t checked = 0, data = 0;
  for (const auto& model : models_up_to(3)) {
    const AntiSymplecticInvolution tau = picard_involution(model);
    const ComponentGroup group(tau);
    const IntegerMatrix basis = invariant_basis(tau);
    sweeps::CoherenceInput in;
    in.genus = model.type.g;
    in.iotaStar = flatten(model.iotaStar);
    in.invariantBasis = flatten(basis);
    in.invariantRank = basis.rows();
    for (const auto& comp : group.components()) in.twiceMu.push_back(to_int64(comp.twiceMu));
    const IntegerMatrix oneMinus = IntegerMatrix::identity(model.rank()) - tau.matrix();
    for (const auto& q : real_theta(model)) {
      const AHDatum datum = alpha_from_theta(q);
      in.rows.clear();
      for (const auto& comp : group.components()) {
        const auto row = w_class(datum, tau, comp).values();
        in.rows.push_back(row);
        for (std::size_t j = 0; j < model.rank(); ++j) {
          const RealComponent shifted{comp.twiceMu + oneMinus.column(j)};
          out.require(w_class(datum, tau, shifted).values() == row,
                      "coset dependence for " + model.type.to_string() + " q=" + q.to_string());
          out.require(group.canonical(shifted.twiceMu) == comp, "canonical representative unstable");
        }
      }
      const auto counts = sweeps::coherence_sweep(in, 2, opt.mode);
      out.require(counts.normMismatches == 0,
                  std::to_string(counts.normMismatches) + " norm mismatches for " +
                      model.type.to_string() + " q=" + q.to_string());
      out.require(counts.normRelationMismatches == 0,
                  std::to_string(counts.normRelationMismatches) + " norm-relation mismatches for " +
                      model.type.to_string() + " q=" + q.to_string());
      checked += counts.checked;
      ++data;
    }
  }
  out.detail << (out.passed ? std::to_string(data) + " real theta data, " + std::to_string(checked) +
                                  " (component, lambda) checks"
                            : "");
}

// 6. Formula vs semi-character recursion, g <= 2.
void two_route(const VerifyOptions& opt, Outcome& out) {
  for (int g = 0; g <= 2; ++g) {
    out.require(sweeps::two_route_violations(g, 2, opt.mode) == 0,
                "recursion disagrees with the formula at g=" + std::to_string(g));
    // Exact rational closed form against the formula.
    const std::size_t len = static_cast<std::size_t>(2 * g);
    std::size_t boxSize = 1;
    for (std::size_t i = 0; i < len; ++i) boxSize *= 5;
    for (const auto& q : enumerate_theta(g)) {
      const AHDatum datum = alpha_from_theta(q);
      for (std::size_t idx = 0; idx < boxSize; ++idx) {
        IntegerVector lambda(len);
        std::size_t r = idx;
        for (auto& x : lambda) {
          x = static_cast<long>(r % 5) - 2;
          r /= 5;
        }
        if (datum.alpha()(lambda) != theta_alpha_formula(q, lambda)) {
          out.require(false, "closed form disagrees for q=" + q.to_string());
          return;
        }
      }
    }
  }
  out.detail << (out.passed ? "all forms, box [-2,2]^{2g}, g = 0..2" : "");
}

// 7. Cocycle identity of the factor of automorphy, g <= 2.
void cocycle(const VerifyOptions& opt, Outcome& out) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0, largest = 0.0;
  for (const TopologicalType t : {TopologicalType{1, 1, 1}, TopologicalType{2, 1, 0}}) {
    const RealCurveModel model = standard_model(t);
    const PeriodData period = complex_structure(model);
    const std::size_t len = model.rank();
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Angle> angles(len);
      for (auto& a : angles) a = normalize_angle(Angle(static_cast<long>(rng() % 12), 12));
      const AHDatum datum(standard_symplectic_form(model.genus()), angles);
      const IntegerVector l1 = random_signed_unit(rng, len);
      const IntegerVector l2 = random_signed_unit(rng, len);
      Eigen::VectorXd x(static_cast<Eigen::Index>(len));
      for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = unit(rng) - 0.5;
      const Eigen::VectorXcd v = period.to_complex(x);
      Eigen::VectorXd l2d(static_cast<Eigen::Index>(len));
      for (std::size_t i = 0; i < len; ++i) l2d(static_cast<Eigen::Index>(i)) = l2[i].get_d();
      const Complex lhs = factor_of_automorphy(datum, period, l1 + l2, v);
      const Complex rhs = factor_of_automorphy(datum, period, l1, v + period.to_complex(l2d)) *
                          factor_of_automorphy(datum, period, l2, v);
      worst = std::max(worst, std::abs(lhs - rhs));
      largest = std::max(largest, std::abs(lhs));
    }
  }
  out.require(worst <= opt.cocycleTolerance,
              "max deviation " + format_double(worst) + " (largest |a| " + format_double(largest) + ")");
  out.detail << (out.passed ? "max |a(l+l',v) - a(l,v+l')a(l',v)| = " + format_double(worst) : "");
}

// 8. Holonomy of the Chern connection recovers the conjugate semi-character.
void holonomy(const VerifyOptions& opt, Outcome& out) {
  const auto start = Clock::now();
  std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  ThetaSeriesParams params;
  params.integrationSteps = 10000;
  double worst = 0.0;
  std::size_t probes = 0, conjugationFlips = 0, failures = 0;
  for (const auto& model : models_up_to(2)) {
    const PeriodData period = complex_structure(model);
    const std::size_t len = model.rank();
    for (const auto& q : real_theta(model)) {
      const AHDatum datum = alpha_from_theta(q);
      std::vector<IntegerVector> lambdas;
      for (std::size_t j = 0; j < len; ++j) lambdas.push_back(IntegerMatrix::identity(len).column(j));
      if (len > 0)
        for (int k = 0; k < 20; ++k) lambdas.push_back(random_lattice_vector(rng, len, 3));
      for (const auto& lambda : lambdas) {
        const HolonomyResult h = holonomy_probe(datum, period, lambda, params);
        const Complex alpha = angle_to_unit(datum.alpha()(lambda));
        const double dev = std::abs(h.value - std::conj(alpha));
        worst = std::max(worst, dev);
        ++probes;
        if (!h.converged || dev > opt.holonomyTolerance) {
          ++failures;
          if (std::abs(h.value - alpha) <= opt.holonomyTolerance) ++conjugationFlips;
        }
      }
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (failures > 0 && failures == conjugationFlips)
    out.require(false, "holonomy matches alpha instead of its conjugate (global orientation flip)");
  out.require(failures == 0, std::to_string(failures) + " of " + std::to_string(probes) +
                                 " probes off by up to " + format_double(worst));
  out.require(secs < 60.0, "runtime " + format_double(secs) + " s exceeds 60 s");
  out.detail << (out.passed ? std::to_string(probes) + " probes, max deviation " + format_double(worst)
                            : "");
}

// 9. (i/2π) F = E for the canonical connection.
void curvature(const VerifyOptions&, Outcome& out) {
  std::ostringstream report;
  for (const TopologicalType t : {TopologicalType{1, 2, 0}, TopologicalType{2, 1, 0}}) {
    const RealCurveModel model = standard_model(t);
    const PeriodData period = complex_structure(model);
    const AHDatum theta = alpha_from_theta(QuadraticFormZ2(t.g, 0));
    const double coarse = curvature_probe(theta, period, 1e-2);
    const double fine = curvature_probe(theta, period, 5e-3);
    out.require(coarse <= 1e-3, "deviation " + format_double(coarse) + " at step 1e-2 for " + t.to_string());
    out.require(fine * 3.0 <= coarse, "halving the step reduced the deviation only from " +
                                          format_double(coarse) + " to " + format_double(fine));
    const double flat = curvature_probe(flat_character(t.g, 1), period, 1e-2);
    out.require(flat <= 1e-12, "flat datum deviation " + format_double(flat));
    report << (report.tellp() > 0 ? "; " : "") << t.to_string() << ": " << format_double(coarse)
           << " -> " << format_double(fine);
  }
  out.detail << (out.passed ? report.str() : "");
}

// 10. Theta-null vanishing matches Arf, g <= 3.
void parity(const VerifyOptions& opt, Outcome& out) {
  ThetaSeriesParams params;
  params.truncationRadius = 8;
  params.zeroThreshold = 1e-8;
  double smallest = 1e300;
  for (const auto& model : models_up_to(3)) {
    const PeriodData period =
        complex_structure(model, coupled_imaginary_part(model.type.g, 0.5));
    const auto c = theta_parity_census(period, params, opt.mode);
    const std::size_t expectedOdd = model.type.g == 0 ? 0
        : (std::size_t{1} << (model.type.g - 1)) * ((std::size_t{1} << model.type.g) - 1);
    out.require(c.mismatches == 0 && c.inconclusive == 0,
                model.type.to_string() + ": " + std::to_string(c.mismatches) + " mismatches, " +
                    std::to_string(c.inconclusive) + " inconclusive");
    out.require(c.vanishing == expectedOdd, model.type.to_string() + ": " +
                                                std::to_string(c.vanishing) + " vanishing theta-nulls");
    out.require(c.smallestNonzero >= 1e-2,
                model.type.to_string() + ": smallest non-zero theta-null " + format_double(c.smallestNonzero));
    smallest = std::min(smallest, c.smallestNonzero);
  }
  out.detail << (out.passed ? "smallest even theta-null " + format_double(smallest) : "");
}

// 11. Translation by invariant η shifts every row by λ ↦ λ·η.
void equivariance(const VerifyOptions&, Outcome& out) {
  std::size_t pairs = 0;
  for (const auto& model : models_up_to(2)) {
    const int g = model.type.g;
    for (const auto& q : real_theta(model)) {
      const SWTable base = sw_table(model, q);
      for (Bits eta : invariant_classes(model)) {
        const SWTable moved = sw_table(model, translate(q, eta));
        out.require(moved.rows.size() == base.rows.size(), "row count changed");
        for (std::size_t r = 0; r < base.rows.size() && out.passed; ++r) {
          out.require(moved.rows[r].component == base.rows[r].component, "component order changed");
          for (std::size_t i = 0; i < base.invariantBasis.size(); ++i) {
            const int shift = pairing_mod2(g, reduce_mod2(base.invariantBasis[i]), eta);
            out.require(moved.rows[r].row[i] == (base.rows[r].row[i] ^ shift),
                        "row shift fails for " + model.type.to_string() + " q=" + q.to_string());
          }
          for (std::size_t c = 0; c < model.circleClasses.size(); ++c) {
            const int shift = pairing_mod2(g, reduce_mod2(model.circleClasses[c]), eta);
            out.require(moved.rows[r].circleValues[c] == (base.rows[r].circleValues[c] ^ shift),
                        "circle value shift fails");
          }
        }
        for (std::size_t c = 0; c < model.circleClasses.size(); ++c) {
          const int shift = pairing_mod2(g, reduce_mod2(model.circleClasses[c]), eta);
          out.require(moved.spinData[c] == (base.spinData[c] ^ shift), "spinData shift fails");
        }
        ++pairs;
        if (!out.passed) return;
      }
    }
  }
  out.detail << std::to_string(pairs) << " (q, eta) pairs";
}

// 12. Circle-class generation and row-[0] reconstruction.
void circle_generation(const VerifyOptions&, Outcome& out) {
  std::size_t models = 0, tables = 0;
  for (const auto& model : models_up_to(6)) {
    if (auto why = model_violation(model)) out.require(false, model.type.to_string() + ": " + *why);
    out.require(circle_generation_check(model), "generation fails for " + model.type.to_string());
    ++models;
    if (model.type.g > 4) continue;
    for (const auto& q : real_theta(model)) {
      const SWTable table = sw_table(model, q);
      out.require(reconstruct_row_zero(table) == table.rows.front().row,
                  "reconstruction fails for " + model.type.to_string() + " q=" + q.to_string());
      ++tables;
      if (!out.passed) return;
    }
  }
  out.detail << std::to_string(models) << " models generate; " << tables << " rows reconstructed";
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(const VerifyOptions&, Outcome&)> check;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "theta census #theta = 2^{2g}, g <= 6", theta_census},
      {2, "type census for g <= 1", type_census},
      {3, "Arf even/odd census, g <= 4", arf_census_check},
      {4, "real Picard components = 2^{n-1}, g <= 8", component_count},
      {5, "w coherence, coset independence, norm relation, g <= 3", coherence},
      {6, "theta semi-character: formula = recursion, g <= 2", two_route},
      {7, "factor of automorphy cocycle, g <= 2", cocycle},
      {8, "holonomy recovers conj(alpha), g <= 2", holonomy},
      {9, "curvature normalization (i/2pi) F = E", curvature},
      {10, "theta-null parity matches Arf, g <= 3", parity},
      {11, "torsor equivariance of SW tables, g <= 2", equivariance},
      {12, "circle-class generation and row reconstruction", circle_generation},
  };
  return all;
}

}  // namespace

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "lattice") return {2, 4, 12};
  if (suite == "theta") return {1, 3};
  if (suite == "ah") return {6, 7};
  if (suite == "sw") return {5, 11};
  if (suite == "analytic") return {8, 9, 10};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  throw ValidationError("unknown suite '" + suite + "' (expected lattice|theta|ah|sw|analytic|all)");
}

CriterionResult run_criterion(int id, const VerifyOptions& options) {
  const auto& all = criteria();
  const auto it = std::find_if(all.begin(), all.end(), [&](const Criterion& c) { return c.id == id; });
  if (it == all.end()) throw ValidationError("unknown criterion " + std::to_string(id));
  CriterionResult result;
  result.id = id;
  result.name = it->name;
  Outcome outcome;
  const auto start = Clock::now();
  try {
    it->check(options, outcome);
  } catch (const std::exception& e) {
    outcome.require(false, std::string("exception: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  result.passed = outcome.passed;
  result.detail = outcome.detail.str();
  return result;
}

std::vector<CriterionResult> run_suite(const std::string& suite, const VerifyOptions& options) {
  std::vector<CriterionResult> out;
  for (int id : suite_criteria(suite)) out.push_back(run_criterion(id, options));
  return out;
}

}  // namespace ktheta
