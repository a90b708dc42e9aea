#include "ktheta/appell_humbert.hpp"

#include <stdexcept>

#include "ktheta/errors.hpp"

namespace ktheta {

Angle normalize_angle(const mpq_class& x) {
  mpq_class r = x;
  r.canonicalize();
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  r -= fl;
  r.canonicalize();
  return r;
}

std::string angle_to_string(const Angle& a) {
  if (a.get_den() == 1) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

Angle angle_from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw ValidationError("malformed angle: " + s);
  q.canonicalize();
  return normalize_angle(q);
}

bool is_alternating(const IntegerMatrix& e) {
  if (e.rows() != e.cols()) return false;
  for (std::size_t i = 0; i < e.rows(); ++i) {
    if (sgn(e(i, i)) != 0) return false;
    for (std::size_t j = i + 1; j < e.cols(); ++j)
      if (e(i, j) != -e(j, i)) return false;
  }
  return true;
}

SemiCharacter::SemiCharacter(IntegerMatrix form, std::vector<Angle> basisAngles)
    : form_(std::move(form)), angles_(std::move(basisAngles)) {
  if (!is_alternating(form_)) throw ValidationError("semi-character form must be alternating");
  if (form_.rows() != angles_.size() || angles_.size() % 2 != 0)
    throw ValidationError("semi-character needs 2g basis angles for a 2g x 2g form");
  for (auto& a : angles_) a = normalize_angle(a);
}

Angle SemiCharacter::operator()(const IntegerVector& lambda) const {
  if (lambda.size() != angles_.size()) throw ValidationError("semi-character: length mismatch");
  mpq_class acc = 0;
  Integer cross = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (sgn(lambda[i]) == 0) continue;
    acc += mpq_class(lambda[i]) * angles_[i];
    for (std::size_t j = i + 1; j < lambda.size(); ++j)
      if (sgn(form_(i, j)) != 0) cross += lambda[i] * lambda[j] * form_(i, j);
  }
  acc += normalize_angle(mpq_class(cross, 2));
  return normalize_angle(acc);
}

Angle eval_semicharacter(const SemiCharacter& alpha, const IntegerVector& lambda) {
  return alpha(lambda);
}

AHDatum::AHDatum(SemiCharacter alpha) : alpha_(std::move(alpha)) {}

AHDatum::AHDatum(IntegerMatrix e, std::vector<Angle> basisAngles)
    : alpha_(std::move(e), std::move(basisAngles)) {}

AHDatum trivial_datum(std::size_t genus) {
  return AHDatum(IntegerMatrix(2 * genus, 2 * genus), std::vector<Angle>(2 * genus, Angle(0)));
}

AHDatum tensor(const AHDatum& d1, const AHDatum& d2) {
  if (d1.rank() != d2.rank()) throw ValidationError("tensor: genus mismatch");
  std::vector<Angle> angles(d1.rank());
  for (std::size_t i = 0; i < angles.size(); ++i)
    angles[i] = d1.alpha().basis_angles()[i] + d2.alpha().basis_angles()[i];
  return AHDatum(d1.E() + d2.E(), std::move(angles));
}

AHDatum dual(const AHDatum& d) {
  std::vector<Angle> angles(d.rank());
  for (std::size_t i = 0; i < angles.size(); ++i) angles[i] = -d.alpha().basis_angles()[i];
  return AHDatum(-d.E(), std::move(angles));
}

AHDatum flat_character(int genus, Bits eta) {
  const auto rank = static_cast<std::size_t>(2 * genus);
  std::vector<Angle> angles(rank);
  for (std::size_t i = 0; i < rank; ++i)
    angles[i] = normalize_angle(Angle(pairing_mod2(genus, Bits{1} << i, eta), 2));
  return AHDatum(IntegerMatrix(rank, rank), std::move(angles));
}

AHDatum alpha_from_theta(const QuadraticFormZ2& q) {
  const auto rank = static_cast<std::size_t>(2 * q.genus());
  std::vector<Angle> angles(rank);
  for (std::size_t i = 0; i < rank; ++i) angles[i] = normalize_angle(Angle(q.basis_value(static_cast<int>(i)), 2));
  return AHDatum(standard_symplectic_form(static_cast<std::size_t>(q.genus())), std::move(angles));
}

Angle theta_alpha_formula(const QuadraticFormZ2& q, const IntegerVector& lambda) {
  if (lambda.size() != static_cast<std::size_t>(2 * q.genus()))
    throw ValidationError("theta_alpha_formula: length mismatch");
  return normalize_angle(Angle(q.eval(reduce_mod2(lambda)), 2));
}

H0Count h0_count(const IntegerMatrix& e) {
  if (!is_alternating(e)) throw ValidationError("h0_count: E must be alternating");
  const SmithForm snf = smith_normal_form(e);
  if (snf.rank() < e.rows()) return H0Count{0, true};
  Integer det = 1;
  for (const auto& d : snf.diagonal()) det *= d;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), det.get_mpz_t());
  if (root * root != det) throw std::logic_error("alternating form with non-square determinant");
  return H0Count{root, false};
}

bool is_real_datum(const AHDatum& datum, const IntegerMatrix& tau) {
  if (tau.rows() != datum.rank() || tau.cols() != datum.rank())
    throw ValidationError("is_real_datum: genus mismatch");
  const IntegerMatrix& e = datum.E();
  if (!(tau.transpose() * e * tau == -e)) return false;
  for (std::size_t i = 0; i < datum.rank(); ++i) {
    const Angle lhs = datum.alpha()(tau.column(i));
    const Angle rhs = normalize_angle(-datum.alpha().basis_angles()[i]);
    if (lhs != rhs) return false;
  }
  return true;
}

bool is_real_datum(const AHDatum& datum, const AntiSymplecticInvolution& tau) {
  return is_real_datum(datum, tau.matrix());
}

}  // namespace ktheta
