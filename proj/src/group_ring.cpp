#include "ihara/group_ring.hpp"

#include <algorithm>
#include <ostream>

#include "ihara/errors.hpp"
#include "ihara/laplace_det.hpp"

namespace ihara {

GroupRingElement::GroupRingElement(FiniteAbelianGroup group)
    : group_(std::move(group)), coeffs_(group_.order()) {}

GroupRingElement GroupRingElement::one(const FiniteAbelianGroup& group) {
  return basis(group, 0);
}

GroupRingElement GroupRingElement::basis(const FiniteAbelianGroup& group, std::size_t element) {
  GroupRingElement x(group);
  x.coeffs_.at(element) = 1;
  return x;
}

GroupRingElement GroupRingElement::norm(const FiniteAbelianGroup& group) {
  GroupRingElement x(group);
  for (auto& c : x.coeffs_) c = 1;
  return x;
}

bool GroupRingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

Integer GroupRingElement::augmentation() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

void GroupRingElement::require_same(const GroupRingElement& o) const {
  if (!(group_ == o.group_)) throw DimensionError("group ring elements over different groups");
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  require_same(o);
  GroupRingElement x = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) x.coeffs_[i] += o.coeffs_[i];
  return x;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
  require_same(o);
  GroupRingElement x = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) x.coeffs_[i] -= o.coeffs_[i];
  return x;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  require_same(o);
  GroupRingElement x(group_);
  const std::size_t d = coeffs_.size();
  for (std::size_t a = 0; a < d; ++a) {
    if (coeffs_[a] == 0) continue;
    for (std::size_t b = 0; b < d; ++b) {
      if (o.coeffs_[b] == 0) continue;
      x.coeffs_[group_.add(a, b)] += coeffs_[a] * o.coeffs_[b];
    }
  }
  return x;
}

GroupRingElement GroupRingElement::operator*(const Integer& k) const {
  GroupRingElement x = *this;
  for (auto& c : x.coeffs_) c *= k;
  return x;
}

GroupRingElement GroupRingElement::operator-() const { return *this * Integer(-1); }

std::ostream& operator<<(std::ostream& os, const GroupRingElement& x) {
  bool first = true;
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    if (x.coeff(i) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << x.coeff(i) << "*(";
    const auto& r = x.group().element(i).residues;
    for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << r[k];
    os << ')';
  }
  if (first) os << '0';
  return os;
}

CyclotomicInteger gr_apply_char(const GroupRingElement& x, const Character& chi) {
  const auto& g = x.group();
  const unsigned m = g.exponent();
  // Collect by power of ζ first, then reduce once.
  IntVector by_power(m);
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    if (x.coeff(i) == 0) continue;
    by_power[static_cast<std::size_t>(char_exponent(g, chi, g.element(i).residues))] += x.coeff(i);
  }
  return CyclotomicInteger::from_poly(m, IntPoly(std::move(by_power)));
}

GroupRingElement gr_det(const GroupRingMatrix& m, const FiniteAbelianGroup& group) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!(x.group() == group)) throw DimensionError("gr_det: entries over different groups");
  return laplace_determinant(m, GroupRingElement(group), GroupRingElement::one(group));
}

}  // namespace ihara
