#include "ihara/int_poly.hpp"

#include <algorithm>
#include <ostream>

#include "ihara/errors.hpp"

namespace ihara {

IntPoly::IntPoly(IntVector coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(IntVector{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree) {
  IntVector v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntVector v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  IntVector v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  IntVector v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
  IntVector v = coeffs_;
  for (auto& c : v) c = -c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly result = constant(1);
  IntPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
  os << '[';
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) os << ", ";
    os << p.coeffs()[i];
  }
  return os << ']';
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& monic) {
  if (monic.is_zero() || monic.leading() != 1)
    throw DimensionError("divmod_monic: divisor is not monic");
  IntVector rem = a.coeffs();
  const std::size_t dd = monic.coeffs().size() - 1;
  if (rem.size() <= dd) return {IntPoly{}, a};
  IntVector quot(rem.size() - dd);
  for (std::size_t k = rem.size(); k-- > dd;) {
    const Integer c = rem[k];
    if (c == 0) continue;
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= c * monic.coeffs()[j];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

std::vector<Rational> interpolate_rational(std::span<const Integer> xs,
                                           std::span<const Integer> ys) {
  if (xs.size() != ys.size()) throw DimensionError("interpolate: length mismatch");
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      Integer gap = xs[i] - xs[i - level];
      if (gap == 0) throw DimensionError("interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / Rational(gap);
    }
  // Horner on the Newton form: p = dd0 + (x - x0)(dd1 + (x - x1)(...)).
  std::vector<Rational> poly;
  for (std::size_t k = n; k-- > 0;) {
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * Rational(xs[k]);
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  return poly;
}

IntPoly interpolate(std::span<const Integer> xs, std::span<const Integer> ys) {
  std::vector<Rational> q = interpolate_rational(xs, ys);
  IntVector coeffs(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    q[i].canonicalize();
    if (q[i].get_den() != 1) throw ConsistencyError("interpolated polynomial is not integral");
    coeffs[i] = q[i].get_num();
  }
  return IntPoly(std::move(coeffs));
}

IntPoly poly_matrix_det(const PolyMatrix& entries) {
  const std::size_t n = entries.size();
  long max_degree = 0;
  for (const auto& row : entries) {
    if (row.size() != n) throw DimensionError("poly_matrix_det: non-square input");
    for (const auto& p : row) max_degree = std::max(max_degree, p.degree());
  }
  if (n == 0) return IntPoly::constant(1);
  const std::size_t points = n * static_cast<std::size_t>(max_degree) + 1;
  IntVector xs(points), ys(points);
  IntMatrix at(n, n);
  for (std::size_t k = 0; k < points; ++k) {
    xs[k] = static_cast<long>(k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) at(i, j) = entries[i][j].evaluate(xs[k]);
    ys[k] = int_det(at);
  }
  return interpolate(xs, ys);
}

IntPoly cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw DimensionError("cyclotomic_polynomial: m must be positive");
  IntPoly p = IntPoly::monomial(1, m) - IntPoly::constant(1);
  for (unsigned d = 1; d < m; ++d) {
    if (m % d) continue;
    auto [q, r] = divmod_monic(p, cyclotomic_polynomial(d));
    if (!r.is_zero()) throw ConsistencyError("cyclotomic_polynomial: inexact division");
    p = std::move(q);
  }
  return p;
}

namespace {

// p = (u - 1)·q + p(1); returns q and sets `value` to p(1).
IntVector synthetic_divide_at_one(const IntVector& p, Integer& value) {
  IntVector q(p.size() > 0 ? p.size() - 1 : 0);
  Integer carry = 0;
  for (std::size_t k = p.size(); k-- > 0;) {
    carry += p[k];
    if (k > 0) q[k - 1] = carry;
  }
  value = carry;
  return q;
}

}  // namespace

IntVector taylor_coefficients_at_one(const IntPoly& p) {
  IntVector out;
  IntVector cur = p.coeffs();
  while (!cur.empty()) {
    Integer value;
    cur = synthetic_divide_at_one(cur, value);
    out.push_back(value);
  }
  return out;
}

TaylorAtOne<Integer> taylor_at_one(const IntPoly& p) {
  if (p.is_zero()) throw DimensionError("taylor_at_one: zero polynomial");
  IntVector cur = p.coeffs();
  unsigned order = 0;
  for (;;) {
    Integer value;
    IntVector q = synthetic_divide_at_one(cur, value);
    if (value != 0) return {order, value};
    cur = std::move(q);
    ++order;
  }
}

}  // namespace ihara
