#include "ktheta/real_sw.hpp"

#include <stdexcept>

#include "ktheta/errors.hpp"

namespace ktheta {

namespace {

int mod2(const Integer& x) { return mpz_odd_p(x.get_mpz_t()) ? 1 : 0; }

// Exponent of (-1) for an angle in {0, 1/2}.
int sign_exponent(const Angle& a) {
  if (a == 0) return 0;
  if (a == Angle(1, 2)) return 1;
  throw VerificationFailure("semi-character takes a non +-1 value on the invariant lattice: " +
                            angle_to_string(a));
}

}  // namespace

std::vector<mpq_class> RealComponent::mu() const {
  std::vector<mpq_class> out;
  out.reserve(twiceMu.size());
  for (const auto& x : twiceMu) {
    mpq_class h(x, 2);
    h.canonicalize();
    out.push_back(h);
  }
  return out;
}

std::vector<std::string> RealComponent::mu_strings() const {
  std::vector<std::string> out;
  for (const auto& x : mu()) out.push_back(angle_to_string(x));
  return out;
}

ComponentGroup::ComponentGroup(const AntiSymplecticInvolution& tau) {
  const std::size_t n = tau.rank();
  const auto anti = eigenlattice(tau, -1);
  antiBasis_ = IntegerMatrix::from_rows(anti, n);
  const IntegerMatrix oneMinus = IntegerMatrix::identity(n) - tau.matrix();
  std::vector<IntegerVector> gens;
  for (std::size_t j = 0; j < n; ++j) {
    auto coords = echelon_coordinates(antiBasis_, oneMinus.column(j));
    if (!coords) throw std::logic_error("(1 - tau) image escapes the (-1)-eigenlattice");
    gens.push_back(*coords);
  }
  quotient_ = quotient_group(gens, anti.size());
  if (quotient_.infiniteIndex) throw std::logic_error("component group is infinite");
  if (quotient_.cosetRepresentatives.empty())
    throw std::runtime_error("component group too large to enumerate");
  for (const auto& rep : quotient_.cosetRepresentatives)
    components_.push_back(RealComponent{antiBasis_.transpose() * rep});
}

RealComponent ComponentGroup::canonical(const IntegerVector& twiceMu) const {
  auto coords = echelon_coordinates(antiBasis_, twiceMu);
  if (!coords) throw ValidationError("2 mu is not in the (-1)-eigenlattice of tau");
  return RealComponent{antiBasis_.transpose() * quotient_.reduce(*coords)};
}

std::vector<RealComponent> component_group(const AntiSymplecticInvolution& tau) {
  return ComponentGroup(tau).components();
}

Z2Homomorphism::Z2Homomorphism(IntegerMatrix basis, std::vector<int> values)
    : basis_(std::move(basis)), values_(std::move(values)) {
  if (basis_.rows() != values_.size()) throw std::invalid_argument("Z2Homomorphism: size");
}

int Z2Homomorphism::operator()(const IntegerVector& v) const {
  auto coords = echelon_coordinates(basis_, v);
  if (!coords) throw std::invalid_argument("vector is outside the invariant lattice");
  int acc = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) acc ^= values_[i] & mod2((*coords)[i]);
  return acc;
}

IntegerMatrix invariant_basis(const AntiSymplecticInvolution& tau) {
  return IntegerMatrix::from_rows(eigenlattice(tau, 1), tau.rank());
}

Z2Homomorphism w_class(const AHDatum& datum, const AntiSymplecticInvolution& tau,
                       const RealComponent& component) {
  if (!is_real_datum(datum, tau)) throw NotRealError("w_class: datum is not real for tau");
  if (component.twiceMu.size() != tau.rank()) throw ValidationError("w_class: size mismatch");
  if (!(tau.matrix() * component.twiceMu == -component.twiceMu))
    throw ValidationError("w_class: 2 mu is not in the (-1)-eigenlattice of tau");
  IntegerMatrix basis = invariant_basis(tau);
  std::vector<int> values(basis.rows());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    const IntegerVector lambda = basis.row(i);
    const int base = sign_exponent(datum.alpha()(lambda));
    values[i] = base ^ mod2(bilinear(datum.E(), component.twiceMu, lambda));
  }
  return Z2Homomorphism(std::move(basis), std::move(values));
}

int norm_value(const AHDatum& datum, const AntiSymplecticInvolution& tau,
               const IntegerVector& lambda) {
  return mod2(bilinear(datum.E(), lambda, tau.matrix() * lambda));
}

SWTable sw_table(const RealCurveModel& model, const QuadraticFormZ2& q) {
  if (model.type.n == 0) throw EmptyRealLocusError("real locus empty; w undefined");
  if (!is_real_theta(q, model))
    throw NotRealError("form " + q.to_string() + " is not real for type " +
                       model.type.to_string() + " (requires q(T2 x) = q(x) with T2 = iota* mod 2)");
  const AHDatum datum = alpha_from_theta(q);
  const AntiSymplecticInvolution tau = picard_involution(model);
  const ComponentGroup group(tau);

  SWTable table;
  table.model = model;
  table.form = q;
  const IntegerMatrix basis = invariant_basis(tau);
  for (std::size_t i = 0; i < basis.rows(); ++i) table.invariantBasis.push_back(basis.row(i));

  for (const auto& comp : group.components()) {
    const Z2Homomorphism w = w_class(datum, tau, comp);
    SWRow row{comp, w.values(), {}};
    for (const auto& c : model.circleClasses) row.circleValues.push_back(w(c));
    table.rows.push_back(std::move(row));
  }

  // Row [0] on circle classes is the formula value (-1)^{q(C mod 2)}.
  const auto& zero = table.rows.front();
  for (std::size_t i = 0; i < model.circleClasses.size(); ++i) {
    const int formula = q.eval(reduce_mod2(model.circleClasses[i]));
    if (formula != zero.circleValues[i])
      throw VerificationFailure("row [0] disagrees with q on circle class " + std::to_string(i));
    table.spinData.push_back(formula ^ 1);
  }

  // Norm relation: w([0])(λ - ι*λ) = ⟨λ, -ι*λ⟩ mod 2 on the standard basis.
  const Z2Homomorphism w0(basis, zero.row);
  const IntegerMatrix& e = datum.E();
  for (std::size_t j = 0; j < model.rank(); ++j) {
    const IntegerVector lambda = IntegerMatrix::identity(model.rank()).column(j);
    const IntegerVector image = model.iotaStar * lambda;
    const int lhs = w0(lambda - image);
    const int rhs = mod2(bilinear(e, lambda, -image));
    if (lhs != rhs)
      throw VerificationFailure("norm relation fails on basis vector " + std::to_string(j));
  }
  return table;
}

std::vector<int> reconstruct_row_zero(const SWTable& table) {
  const RealCurveModel& model = table.model;
  const std::size_t n = model.rank();
  const AHDatum datum = alpha_from_theta(table.form);
  const AntiSymplecticInvolution tau = picard_involution(model);

  std::vector<IntegerVector> generators;
  std::vector<int> known;
  for (std::size_t i = 0; i < model.circleClasses.size(); ++i) {
    generators.push_back(model.circleClasses[i]);
    known.push_back(table.rows.front().circleValues[i]);
  }
  const IntegerMatrix oneMinus = IntegerMatrix::identity(n) - model.iotaStar;
  for (std::size_t j = 0; j < n; ++j) {
    const IntegerVector lambda = IntegerMatrix::identity(n).column(j);
    generators.push_back(oneMinus * lambda);
    known.push_back(norm_value(datum, tau, lambda));
  }

  std::vector<int> row;
  for (const auto& b : table.invariantBasis) {
    auto x = solve_integer(generators, b);
    if (!x) throw VerificationFailure("circle classes and (1 - iota*) do not generate");
    int acc = 0;
    for (std::size_t k = 0; k < x->size(); ++k) acc ^= known[k] & mod2((*x)[k]);
    row.push_back(acc);
  }
  return row;
}

}  // namespace ktheta
