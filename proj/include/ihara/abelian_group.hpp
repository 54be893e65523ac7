#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ihara/cyclotomic.hpp"

namespace ihara {

using Residues = std::vector<std::int64_t>;

struct GroupElement {
  Residues residues;
  auto operator<=>(const GroupElement&) const = default;
};

/// Character χ_a(s) = ζ_m^{Σ (m/n_i)·a_i·s_i}, identified with its exponent
/// tuple a. The trivial character is the all-zero tuple.
struct Character {
  Residues exponents;
  auto operator<=>(const Character&) const = default;
};

/// Z/n_1 × ... × Z/n_k. Elements are indexed 0..order-1 lexicographically by
/// residue tuple (first coordinate most significant); index 0 is the
/// identity. Characters are indexed the same way by exponent tuple.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;  // trivial group
  explicit FiniteAbelianGroup(std::vector<std::int64_t> cyclic_orders);

  const std::vector<std::int64_t>& cyclic_orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::size_t order() const { return order_; }
  // lcm of the cyclic orders; 1 for the trivial group.
  unsigned exponent() const { return exponent_; }

  bool contains(const Residues& r) const;
  std::size_t index_of(const Residues& r) const;
  GroupElement element(std::size_t index) const;
  Character character(std::size_t index) const;

  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t negate(std::size_t a) const;

  // True when every cyclic factor has order 2 (and there is at least one).
  bool is_elementary_2group() const;

  bool operator==(const FiniteAbelianGroup& o) const { return orders_ == o.orders_; }

 private:
  Residues residues_of(std::size_t index) const;

  std::vector<std::int64_t> orders_;
  std::size_t order_ = 1;
  unsigned exponent_ = 1;
};

std::ostream& operator<<(std::ostream& os, const FiniteAbelianGroup& g);

/// Exponent e ∈ [0, m) with χ(σ) = ζ_m^e, m = exponent(G).
std::int64_t char_exponent(const FiniteAbelianGroup& g, const Character& chi,
                           const Residues& sigma);

/// χ(σ) as an element of Z[ζ_m], m = exponent(G).
CyclotomicInteger char_eval(const FiniteAbelianGroup& g, const Character& chi,
                            const Residues& sigma);

/// The conjugate character χ̄ = χ^{-1}.
Character conj(const FiniteAbelianGroup& g, const Character& chi);

bool is_trivial(const Character& chi);

}  // namespace ihara
