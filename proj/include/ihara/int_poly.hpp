#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "ihara/int_matrix.hpp"
#include "ihara/integer.hpp"

namespace ihara {

/// Univariate integer polynomial, coefficients lowest degree first, stored
/// without trailing zeros (the zero polynomial has no coefficients).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(IntVector coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const IntVector& coeffs() const { return coeffs_; }
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const Integer& leading() const { return coeffs_.back(); }

  Integer evaluate(const Integer& x) const;

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
  IntPoly pow(unsigned e) const;
  bool operator==(const IntPoly& o) const = default;

 private:
  void trim();
  IntVector coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

/// Quotient and remainder by a monic divisor.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& monic);

/// Unique polynomial of degree < xs.size() through the points, as exact
/// rational coefficients (Newton divided differences).
std::vector<Rational> interpolate_rational(std::span<const Integer> xs,
                                           std::span<const Integer> ys);

/// Same, but the result must have integer coefficients; throws
/// ConsistencyError otherwise.
IntPoly interpolate(std::span<const Integer> xs, std::span<const Integer> ys);

using PolyMatrix = std::vector<std::vector<IntPoly>>;

/// Determinant of a square polynomial matrix: evaluate at n·k + 1 integer
/// points (k = max entry degree), take exact Bareiss determinants, and
/// interpolate. Throws DimensionError for non-square input.
IntPoly poly_matrix_det(const PolyMatrix& entries);

/// The m-th cyclotomic polynomial, by exact division of x^m - 1 by Φ_d for
/// every proper divisor d of m.
IntPoly cyclotomic_polynomial(unsigned m);

template <class Coeff>
struct TaylorAtOne {
  unsigned order;
  Coeff lead;
};

/// Multiplicity of the root u = 1 and the first nonvanishing Taylor
/// coefficient p^(ord)(1)/ord!, by repeated synthetic division by (u - 1).
/// Throws DimensionError on the zero polynomial.
TaylorAtOne<Integer> taylor_at_one(const IntPoly& p);

/// The Taylor coefficients (c_0, c_1, ...) of p around u = 1, so that
/// p(u) = Σ c_k (u - 1)^k.
IntVector taylor_coefficients_at_one(const IntPoly& p);

}  // namespace ihara
