#include "ihara/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>

#include "ihara/errors.hpp"
#include "ihara/laplace_det.hpp"

namespace ihara {

const IntPoly& cyclotomic_modulus(unsigned m) {
  static std::mutex mutex;
  static std::map<unsigned, IntPoly> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, cyclotomic_polynomial(m)).first;
  return it->second;
}

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CyclotomicInteger::CyclotomicInteger(unsigned conductor)
    : conductor_(conductor), coeffs_(euler_phi(conductor)) {
  if (conductor == 0) throw DimensionError("cyclotomic conductor must be positive");
}

CyclotomicInteger::CyclotomicInteger(unsigned conductor, const Integer& value)
    : CyclotomicInteger(conductor) {
  coeffs_[0] = value;
}

CyclotomicInteger CyclotomicInteger::root_of_unity(unsigned conductor, std::int64_t exponent) {
  const std::int64_t m = conductor;
  const std::int64_t e = ((exponent % m) + m) % m;
  return from_poly(conductor, IntPoly::monomial(1, static_cast<std::size_t>(e)));
}

CyclotomicInteger CyclotomicInteger::from_poly(unsigned conductor, const IntPoly& p) {
  CyclotomicInteger z(conductor);
  const IntPoly rem = divmod_monic(p, cyclotomic_modulus(conductor)).second;
  for (std::size_t i = 0; i < rem.coeffs().size(); ++i) z.coeffs_[i] = rem.coeffs()[i];
  return z;
}

bool CyclotomicInteger::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

bool CyclotomicInteger::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Integer& c) { return c == 0; });
}

Integer CyclotomicInteger::to_integer() const {
  if (!is_rational()) throw ConsistencyError("cyclotomic integer is not rational");
  return coeffs_[0];
}

CyclotomicInteger CyclotomicInteger::conj() const {
  IntVector raw(conductor_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) raw[(conductor_ - k) % conductor_] += coeffs_[k];
  return from_poly(conductor_, IntPoly(std::move(raw)));
}

void CyclotomicInteger::require_same(const CyclotomicInteger& o) const {
  if (conductor_ != o.conductor_) throw DimensionError("cyclotomic conductor mismatch");
}

CyclotomicInteger CyclotomicInteger::operator+(const CyclotomicInteger& o) const {
  require_same(o);
  CyclotomicInteger z = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) z.coeffs_[i] += o.coeffs_[i];
  return z;
}

CyclotomicInteger CyclotomicInteger::operator-(const CyclotomicInteger& o) const {
  require_same(o);
  CyclotomicInteger z = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) z.coeffs_[i] -= o.coeffs_[i];
  return z;
}

CyclotomicInteger CyclotomicInteger::operator*(const CyclotomicInteger& o) const {
  require_same(o);
  if (coeffs_.size() == 1) return o * coeffs_[0];
  return from_poly(conductor_, IntPoly(coeffs_) * IntPoly(o.coeffs_));
}

CyclotomicInteger CyclotomicInteger::operator*(const Integer& k) const {
  CyclotomicInteger z = *this;
  for (auto& c : z.coeffs_) c *= k;
  return z;
}

CyclotomicInteger CyclotomicInteger::operator-() const {
  CyclotomicInteger z = *this;
  for (auto& c : z.coeffs_) c = -c;
  return z;
}

std::ostream& operator<<(std::ostream& os, const CyclotomicInteger& z) {
  os << "{m=" << z.conductor() << ":";
  for (std::size_t i = 0; i < z.coeffs().size(); ++i) os << (i ? "," : "") << z.coeffs()[i];
  return os << '}';
}

CyclotomicInteger cyclotomic_det(const CycMatrix& m, unsigned conductor) {
  return laplace_determinant(m, CyclotomicInteger(conductor), CyclotomicInteger(conductor, 1));
}

CycPoly::CycPoly(unsigned conductor, std::vector<CyclotomicInteger> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c.conductor() != conductor_) throw DimensionError("cyclotomic conductor mismatch");
  trim();
}

CycPoly CycPoly::from_int_poly(unsigned conductor, const IntPoly& p) {
  std::vector<CyclotomicInteger> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(conductor, v);
  return CycPoly(conductor, std::move(c));
}

void CycPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

CyclotomicInteger CycPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : CyclotomicInteger(conductor_);
}

bool CycPoly::has_rational_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const CyclotomicInteger& c) { return c.is_rational(); });
}

IntPoly CycPoly::to_int_poly() const {
  IntVector v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.to_integer());
  return IntPoly(std::move(v));
}

CycPoly CycPoly::operator+(const CycPoly& o) const {
  if (conductor_ != o.conductor_) throw DimensionError("cyclotomic conductor mismatch");
  std::vector<CyclotomicInteger> v;
  const std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(coeff(i) + o.coeff(i));
  return CycPoly(conductor_, std::move(v));
}

CycPoly CycPoly::operator*(const CycPoly& o) const {
  if (conductor_ != o.conductor_) throw DimensionError("cyclotomic conductor mismatch");
  if (is_zero() || o.is_zero()) return CycPoly(conductor_);
  std::vector<CyclotomicInteger> v(coeffs_.size() + o.coeffs_.size() - 1,
                                   CyclotomicInteger(conductor_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  return CycPoly(conductor_, std::move(v));
}

namespace {

CyclotomicInteger evaluate(const CycPoly& p, const Integer& x) {
  CyclotomicInteger acc(p.conductor());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

CycPoly cyc_poly_matrix_det(const CycPolyMatrix& entries, unsigned conductor) {
  const std::size_t n = entries.size();
  long max_degree = 0;
  for (const auto& row : entries) {
    if (row.size() != n) throw DimensionError("cyc_poly_matrix_det: non-square input");
    for (const auto& p : row) max_degree = std::max(max_degree, p.degree());
  }
  if (n == 0) return CycPoly(conductor, {CyclotomicInteger(conductor, 1)});

  const std::size_t points = n * static_cast<std::size_t>(max_degree) + 1;
  const std::size_t width = euler_phi(conductor);
  IntVector xs(points);
  std::vector<IntVector> ys(width, IntVector(points));
  CycMatrix at(n, std::vector<CyclotomicInteger>(n, CyclotomicInteger(conductor)));
  for (std::size_t k = 0; k < points; ++k) {
    xs[k] = static_cast<long>(k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) at[i][j] = evaluate(entries[i][j], xs[k]);
    const CyclotomicInteger d = cyclotomic_det(at, conductor);
    for (std::size_t c = 0; c < width; ++c) ys[c][k] = d.coeffs()[c];
  }

  // Interpolation is linear, so each ζ-coordinate interpolates on its own.
  std::vector<CyclotomicInteger> coeffs(points, CyclotomicInteger(conductor));
  for (std::size_t c = 0; c < width; ++c) {
    const IntPoly coord = interpolate(xs, ys[c]);
    for (std::size_t k = 0; k < coord.coeffs().size(); ++k) {
      IntVector basis(width);
      basis[c] = coord.coeffs()[k];
      coeffs[k] = coeffs[k] + CyclotomicInteger::from_poly(conductor, IntPoly(basis));
    }
  }
  return CycPoly(conductor, std::move(coeffs));
}

TaylorAtOne<CyclotomicInteger> taylor_at_one(const CycPoly& p) {
  if (p.is_zero()) throw DimensionError("taylor_at_one: zero polynomial");
  const unsigned m = p.conductor();
  std::vector<CyclotomicInteger> cur = p.coeffs();
  unsigned order = 0;
  for (;;) {
    std::vector<CyclotomicInteger> q(cur.size() - 1, CyclotomicInteger(m));
    CyclotomicInteger carry(m);
    for (std::size_t k = cur.size(); k-- > 0;) {
      carry += cur[k];
      if (k > 0) q[k - 1] = carry;
    }
    if (!carry.is_zero()) return {order, carry};
    cur = std::move(q);
    ++order;
  }
}

}  // namespace ihara
