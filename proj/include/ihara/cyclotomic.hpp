#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ihara/int_poly.hpp"
#include "ihara/integer.hpp"

namespace ihara {

/// Cached m-th cyclotomic polynomial. Thread-safe; the returned reference
/// stays valid for the lifetime of the program.
const IntPoly& cyclotomic_modulus(unsigned m);

/// Euler's totient, the degree of Φ_m.
unsigned euler_phi(unsigned m);

/// Element of Z[ζ_m], stored as its coefficient vector in the basis
/// 1, ζ, ..., ζ^(φ(m)-1), i.e. an integer polynomial reduced modulo Φ_m.
class CyclotomicInteger {
 public:
  explicit CyclotomicInteger(unsigned conductor);  // zero
  CyclotomicInteger(unsigned conductor, const Integer& value);

  // ζ_m^exponent for any integer exponent.
  static CyclotomicInteger root_of_unity(unsigned conductor, std::int64_t exponent);
  // Reduction of an arbitrary integer polynomial in ζ.
  static CyclotomicInteger from_poly(unsigned conductor, const IntPoly& p);

  unsigned conductor() const { return conductor_; }
  const IntVector& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  // Throws ConsistencyError unless is_rational().
  Integer to_integer() const;

  // Complex conjugation, ζ ↦ ζ^{-1}.
  CyclotomicInteger conj() const;

  CyclotomicInteger operator+(const CyclotomicInteger& o) const;
  CyclotomicInteger operator-(const CyclotomicInteger& o) const;
  CyclotomicInteger operator*(const CyclotomicInteger& o) const;
  CyclotomicInteger operator*(const Integer& k) const;
  CyclotomicInteger operator-() const;
  CyclotomicInteger& operator+=(const CyclotomicInteger& o) { return *this = *this + o; }
  bool operator==(const CyclotomicInteger& o) const = default;

 private:
  void require_same(const CyclotomicInteger& o) const;

  unsigned conductor_;
  IntVector coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CyclotomicInteger& z);

using CycMatrix = std::vector<std::vector<CyclotomicInteger>>;

/// Determinant over Z[ζ_m] (memoized Laplace expansion).
CyclotomicInteger cyclotomic_det(const CycMatrix& m, unsigned conductor);

/// Polynomial in u with coefficients in Z[ζ_m], lowest degree first, no
/// trailing zero coefficients.
class CycPoly {
 public:
  explicit CycPoly(unsigned conductor) : conductor_(conductor) {}
  CycPoly(unsigned conductor, std::vector<CyclotomicInteger> coeffs);
  static CycPoly from_int_poly(unsigned conductor, const IntPoly& p);

  unsigned conductor() const { return conductor_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<CyclotomicInteger>& coeffs() const { return coeffs_; }
  CyclotomicInteger coeff(std::size_t i) const;

  bool has_rational_coefficients() const;
  // Throws ConsistencyError unless has_rational_coefficients().
  IntPoly to_int_poly() const;

  CycPoly operator+(const CycPoly& o) const;
  CycPoly operator*(const CycPoly& o) const;
  bool operator==(const CycPoly& o) const = default;

 private:
  void trim();

  unsigned conductor_;
  std::vector<CyclotomicInteger> coeffs_;
};

using CycPolyMatrix = std::vector<std::vector<CycPoly>>;

/// Determinant of a square matrix over Z[ζ_m][u], by evaluation at integer
/// points and coordinatewise exact interpolation.
CycPoly cyc_poly_matrix_det(const CycPolyMatrix& entries, unsigned conductor);

TaylorAtOne<CyclotomicInteger> taylor_at_one(const CycPoly& p);

}  // namespace ihara
