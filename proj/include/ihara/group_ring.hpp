#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "ihara/abelian_group.hpp"
#include "ihara/cyclotomic.hpp"
#include "ihara/integer.hpp"

namespace ihara {

/// Element Σ_σ c_σ·σ of the integral group ring Z[G], coefficients indexed
/// by the group's element index. Arithmetic between elements over different
/// groups throws DimensionError.
class GroupRingElement {
 public:
  explicit GroupRingElement(FiniteAbelianGroup group);  // zero

  static GroupRingElement one(const FiniteAbelianGroup& group);
  static GroupRingElement basis(const FiniteAbelianGroup& group, std::size_t element);
  // N_G = Σ_σ σ.
  static GroupRingElement norm(const FiniteAbelianGroup& group);

  const FiniteAbelianGroup& group() const { return group_; }
  const IntVector& coeffs() const { return coeffs_; }
  const Integer& coeff(std::size_t element) const { return coeffs_[element]; }
  Integer& coeff(std::size_t element) { return coeffs_[element]; }

  bool is_zero() const;
  // s(x) = Σ c_σ.
  Integer augmentation() const;

  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  GroupRingElement operator*(const Integer& k) const;
  GroupRingElement operator-() const;
  bool operator==(const GroupRingElement& o) const = default;

 private:
  void require_same(const GroupRingElement& o) const;

  FiniteAbelianGroup group_;
  IntVector coeffs_;
};

std::ostream& operator<<(std::ostream& os, const GroupRingElement& x);

/// χ(x) = Σ_σ c_σ·χ(σ) ∈ Z[ζ_m]; a ring morphism Z[G] → Z[ζ_m].
CyclotomicInteger gr_apply_char(const GroupRingElement& x, const Character& chi);

using GroupRingMatrix = std::vector<std::vector<GroupRingElement>>;

/// Determinant in the commutative ring Z[G] by memoized cofactor expansion.
/// Z[G] has zero divisors, so no division is ever performed.
GroupRingElement gr_det(const GroupRingMatrix& m, const FiniteAbelianGroup& group);

}  // namespace ihara
