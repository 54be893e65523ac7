#include "ihara/abelian_group.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "ihara/errors.hpp"

namespace ihara {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> cyclic_orders)
    : orders_(std::move(cyclic_orders)) {
  std::int64_t lcm = 1;
  for (auto n : orders_) {
    if (n < 1) throw DimensionError("cyclic orders must be >= 1");
    order_ *= static_cast<std::size_t>(n);
    lcm = std::lcm(lcm, n);
  }
  exponent_ = static_cast<unsigned>(lcm);
}

bool FiniteAbelianGroup::contains(const Residues& r) const {
  if (r.size() != orders_.size()) return false;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] < 0 || r[i] >= orders_[i]) return false;
  return true;
}

std::size_t FiniteAbelianGroup::index_of(const Residues& r) const {
  if (r.size() != orders_.size()) throw DimensionError("group element has the wrong rank");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::int64_t n = orders_[i];
    idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(((r[i] % n) + n) % n);
  }
  return idx;
}

Residues FiniteAbelianGroup::residues_of(std::size_t index) const {
  Residues r(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    const auto n = static_cast<std::size_t>(orders_[i]);
    r[i] = static_cast<std::int64_t>(index % n);
    index /= n;
  }
  return r;
}

GroupElement FiniteAbelianGroup::element(std::size_t index) const { return {residues_of(index)}; }

Character FiniteAbelianGroup::character(std::size_t index) const { return {residues_of(index)}; }

std::size_t FiniteAbelianGroup::add(std::size_t a, std::size_t b) const {
  Residues ra = residues_of(a);
  const Residues rb = residues_of(b);
  for (std::size_t i = 0; i < ra.size(); ++i) ra[i] = (ra[i] + rb[i]) % orders_[i];
  return index_of(ra);
}

std::size_t FiniteAbelianGroup::negate(std::size_t a) const {
  Residues r = residues_of(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (orders_[i] - r[i]) % orders_[i];
  return index_of(r);
}

bool FiniteAbelianGroup::is_elementary_2group() const {
  return !orders_.empty() &&
         std::all_of(orders_.begin(), orders_.end(), [](std::int64_t n) { return n == 2; });
}

std::ostream& operator<<(std::ostream& os, const FiniteAbelianGroup& g) {
  if (g.rank() == 0) return os << "1";
  for (std::size_t i = 0; i < g.rank(); ++i) os << (i ? " x " : "") << "Z/" << g.cyclic_orders()[i];
  return os;
}

std::int64_t char_exponent(const FiniteAbelianGroup& g, const Character& chi,
                           const Residues& sigma) {
  if (chi.exponents.size() != g.rank() || sigma.size() != g.rank())
    throw DimensionError("character or element has the wrong rank");
  const std::int64_t m = g.exponent();
  std::int64_t e = 0;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const std::int64_t n = g.cyclic_orders()[i];
    e = (e + (m / n) * ((chi.exponents[i] % n) * (sigma[i] % n) % n)) % m;
  }
  return ((e % m) + m) % m;
}

CyclotomicInteger char_eval(const FiniteAbelianGroup& g, const Character& chi,
                            const Residues& sigma) {
  return CyclotomicInteger::root_of_unity(g.exponent(), char_exponent(g, chi, sigma));
}

Character conj(const FiniteAbelianGroup& g, const Character& chi) {
  Character out = chi;
  for (std::size_t i = 0; i < out.exponents.size(); ++i) {
    const std::int64_t n = g.cyclic_orders()[i];
    out.exponents[i] = ((n - out.exponents[i]) % n + n) % n;
  }
  return out;
}

bool is_trivial(const Character& chi) {
  return std::all_of(chi.exponents.begin(), chi.exponents.end(),
                     [](std::int64_t a) { return a == 0; });
}

}  // namespace ihara
