#include "ktheta/theta_form.hpp"

#include <stdexcept>

#include "ktheta/errors.hpp"
#include "ktheta/klein_model.hpp"

namespace ktheta {

namespace {

void check_genus(int genus) {
  if (genus < 0 || genus > kMaxFormGenus)
    throw ValidationError("genus " + std::to_string(genus) + " outside the supported range [0, " +
                          std::to_string(kMaxFormGenus) + "]");
}

Bits full_mask(int genus) { return genus == 0 ? 0 : (Bits{1} << (2 * genus)) - 1; }

// Swap the e and f halves: b_i·η for every basis vector b_i at once.
Bits dual_bits(int genus, Bits eta) {
  const Bits mask = (Bits{1} << genus) - 1;
  return ((eta & mask) << genus) | ((eta >> genus) & mask);
}

}  // namespace

int pairing_mod2(int genus, Bits x, Bits y) { return parity(x & dual_bits(genus, y)); }

Bits reduce_mod2(const IntegerVector& v) {
  if (v.size() > 64) throw ValidationError("vector too long for a 64-bit mod-2 reduction");
  Bits out = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (mpz_odd_p(v[i].get_mpz_t())) out |= Bits{1} << i;
  return out;
}

Gf2Matrix::Gf2Matrix(const IntegerMatrix& m) {
  if (m.rows() > 64) throw ValidationError("matrix too large for a 64-bit mod-2 reduction");
  columns_.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) columns_.push_back(reduce_mod2(m.column(j)));
}

Bits Gf2Matrix::apply(Bits x) const {
  Bits out = 0;
  for (std::size_t j = 0; j < columns_.size(); ++j)
    if ((x >> j) & 1U) out ^= columns_[j];
  return out;
}

QuadraticFormZ2::QuadraticFormZ2(int genus, Bits basisValues) : genus_(genus), basis_(basisValues) {
  check_genus(genus);
  if ((basisValues & ~full_mask(genus)) != 0)
    throw ValidationError("form has bits beyond 2g = " + std::to_string(2 * genus));
}

QuadraticFormZ2 QuadraticFormZ2::from_values(const std::vector<int>& values) {
  if (values.size() % 2 != 0) throw ValidationError("form needs an even number (2g) of bits");
  Bits b = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0 && values[i] != 1) throw ValidationError("form bits must be 0 or 1");
    if (values[i]) b |= Bits{1} << i;
  }
  return QuadraticFormZ2(static_cast<int>(values.size() / 2), b);
}

std::vector<int> QuadraticFormZ2::values() const {
  std::vector<int> v(static_cast<std::size_t>(2 * genus_));
  for (int i = 0; i < 2 * genus_; ++i) v[static_cast<std::size_t>(i)] = basis_value(i);
  return v;
}

int QuadraticFormZ2::eval(const std::vector<int>& x) const {
  if (x.size() != static_cast<std::size_t>(2 * genus_))
    throw ValidationError("eval_q: vector length " + std::to_string(x.size()) + " != 2g = " +
                          std::to_string(2 * genus_));
  Bits b = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] & 1) b |= Bits{1} << i;
  return eval(b);
}

int QuadraticFormZ2::arf() const {
  const Bits mask = (Bits{1} << genus_) - 1;
  return parity((basis_ & mask) & (basis_ >> genus_));
}

std::string QuadraticFormZ2::to_string() const {
  std::string s;
  for (int i = 0; i < 2 * genus_; ++i) {
    if (i) s += ',';
    s += static_cast<char>('0' + basis_value(i));
  }
  return s;
}

int arf(const QuadraticFormZ2& q) { return q.arf(); }

std::uint64_t theta_count(int genus) {
  check_genus(genus);
  return std::uint64_t{1} << (2 * genus);
}

std::vector<QuadraticFormZ2> enumerate_theta_range(int genus, std::uint64_t begin,
                                                   std::uint64_t end) {
  const std::uint64_t total = theta_count(genus);
  if (genus > 13) throw ValidationError("explicit enumeration is limited to g <= 13");
  end = std::min(end, total);
  std::vector<QuadraticFormZ2> out;
  if (begin >= end) return out;
  out.reserve(end - begin);
  for (std::uint64_t b = begin; b < end; ++b) out.emplace_back(genus, b);
  return out;
}

std::vector<QuadraticFormZ2> enumerate_theta(int genus) {
  return enumerate_theta_range(genus, 0, theta_count(genus));
}

QuadraticFormZ2 translate(const QuadraticFormZ2& q, Bits eta) {
  if ((eta & ~full_mask(q.genus())) != 0) throw ValidationError("translate: eta length mismatch");
  return QuadraticFormZ2(q.genus(), q.basis_values() ^ dual_bits(q.genus(), eta));
}

bool is_real_theta(const QuadraticFormZ2& q, const RealCurveModel& model) {
  if (static_cast<int>(model.genus()) != q.genus())
    throw ValidationError("is_real_theta: genus mismatch");
  // q∘T₂ and q share the polar form, so agreement on a basis is enough.
  const Gf2Matrix t(model.iotaStar);
  for (int i = 0; i < 2 * q.genus(); ++i) {
    const Bits b = Bits{1} << i;
    if (q.eval(t.apply(b)) != q.eval(b)) return false;
  }
  return true;
}

std::vector<QuadraticFormZ2> real_theta(const RealCurveModel& model) {
  std::vector<QuadraticFormZ2> out;
  for (const auto& q : enumerate_theta(static_cast<int>(model.genus())))
    if (is_real_theta(q, model)) out.push_back(q);
  return out;
}

std::vector<Bits> invariant_classes(const RealCurveModel& model) {
  const int g = static_cast<int>(model.genus());
  const Gf2Matrix t(model.iotaStar);
  std::vector<Bits> out;
  for (Bits eta = 0; eta < theta_count(g); ++eta)
    if (t.apply(eta) == eta) out.push_back(eta);
  return out;
}

}  // namespace ktheta
