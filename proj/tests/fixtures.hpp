#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "ihara/cover.hpp"
#include "ihara/generate.hpp"
#include "ihara/multigraph.hpp"

namespace fixtures {

using namespace ihara;

inline VoltageAssignment voltages(std::vector<std::int64_t> orders,
                                  std::initializer_list<Residues> values) {
  VoltageAssignment v{FiniteAbelianGroup(std::move(orders)), {}};
  for (const auto& r : values) v.voltages.push_back(GroupElement{r});
  return v;
}

// C₃ with voltages (1,0,0) over Z/2; the total graph is C₆.
inline DerivedCover c3_double() {
  return derive(graphs::cycle(3), voltages({2}, {{1}, {0}, {0}}));
}

// Theta graph with voltages a = 1, b = c = 0 over Z/2.
inline DerivedCover theta_double() {
  return derive(graphs::theta(3), voltages({2}, {{1}, {0}, {0}}));
}

inline DerivedCover trivial_cover(const Multigraph& x) {
  VoltageAssignment v{FiniteAbelianGroup(), std::vector<GroupElement>(x.edge_count(), GroupElement{})};
  return derive(x, v);
}

// C_n → C_{dn}: one edge carries a generator of Z/d.
inline DerivedCover cycle_cover(std::size_t n, std::int64_t d) {
  VoltageAssignment v{FiniteAbelianGroup({d}), std::vector<GroupElement>(n, GroupElement{{0}})};
  v.voltages[0] = GroupElement{{1}};
  return derive(graphs::cycle(n), v);
}

// K₄ over (Z/2)² with Y and all three intermediate double covers connected.
inline DerivedCover k4_klein() {
  return derive(graphs::complete(4),
                voltages({2, 2}, {{1, 0}, {0, 1}, {0, 0}, {1, 1}, {0, 0}, {0, 0}}));
}

// Seeded connected covers with r_X >= 2 (so every nontrivial L-function
// vanishes at u = 1 to the same order) over the given group.
inline std::vector<DerivedCover> random_covers(std::uint64_t seed, const FiniteAbelianGroup& g,
                                               std::size_t count, std::size_t max_vertices,
                                               std::size_t max_edges) {
  std::vector<DerivedCover> out;
  Rng rng(seed);
  while (out.size() < count) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, max_vertices)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(n + 1, max_edges)(rng);
    Multigraph x = random_multigraph(rng, {n, m, true});
    DerivedCover c = derive(x, random_voltages(rng, g, x.edge_count()));
    if (is_connected_cover(c)) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace fixtures
