#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ihara/abelian_group.hpp"
#include "ihara/cyclotomic.hpp"
#include "ihara/int_matrix.hpp"
#include "ihara/multigraph.hpp"

namespace ihara {

/// One group element per base edge, read along the edge's reference
/// orientation; the reversed edge carries the inverse.
struct VoltageAssignment {
  FiniteAbelianGroup group;
  std::vector<GroupElement> voltages;
};

/// The derived cover Y → X of a voltage assignment.
///
/// Vertex (v, g) of Y has index v·d + idx(g). Base edge e = (i → j) with
/// voltage g_e lifts, for every h ∈ G in index order, to the edge
/// (i, h) → (j, h + g_e) at index e·d + idx(h). G acts by
/// σ·(v, g) = (v, g + σ) and the section is w_i = (v_i, 0).
class DerivedCover {
 public:
  // Throws ValidationError when the voltage count differs from |E_X| or a
  // voltage is not an element of the group.
  DerivedCover(Multigraph base, VoltageAssignment voltage);

  const Multigraph& base() const { return base_; }
  const Multigraph& total() const { return total_; }
  const VoltageAssignment& voltage() const { return voltage_; }
  const FiniteAbelianGroup& group() const { return voltage_.group; }
  std::size_t degree() const { return voltage_.group.order(); }
  // Element index of the voltage on base edge e.
  std::size_t voltage_index(std::size_t e) const { return voltage_idx_[e]; }

  VertexId lift(VertexId base_vertex, std::size_t element) const {
    return base_vertex * degree() + element;
  }
  VertexId project(VertexId w) const { return w / degree(); }
  std::size_t fiber_element(VertexId w) const { return w % degree(); }
  VertexId act(std::size_t sigma, VertexId w) const;
  VertexId section(VertexId base_vertex) const { return lift(base_vertex, 0); }
  // Image of lifted edge e·d + h under σ: the lift of e at h + σ.
  std::size_t act_on_edge(std::size_t sigma, std::size_t edge) const;

 private:
  Multigraph base_;
  VoltageAssignment voltage_;
  std::vector<std::size_t> voltage_idx_;
  Multigraph total_;
};

DerivedCover derive(const Multigraph& base, VoltageAssignment voltage);

bool is_connected_cover(const DerivedCover& c);

/// Throws DisconnectedCoverError unless the total graph is connected.
void require_connected_cover(const DerivedCover& c, const char* what);

/// A(σ) for every σ, indexed by group element index.
struct SigmaMatrices {
  FiniteAbelianGroup group;
  std::vector<IntMatrix> by_element;

  const IntMatrix& operator[](std::size_t sigma) const { return by_element[sigma]; }
};

/// A(σ) from the voltages: a_ij(σ) = #{i → j with voltage σ} +
/// #{j → i with voltage -σ}; a loop with voltage 0 lands twice on A(1)_ii.
/// Requires a connected cover.
SigmaMatrices sigma_matrices(const DerivedCover& c);

/// A(σ) read off the total graph for an arbitrary section (one vertex in
/// each fiber): a_ij(σ) counts edges of Y between section[i] and
/// σ·section[j], loops at section[i] counted twice on A(1).
SigmaMatrices sigma_matrices_from_section(const DerivedCover& c,
                                          std::span<const VertexId> section);

/// A_χ = Σ_σ χ(σ)·A(σ) over Z[ζ_m], m = exponent(G).
CycMatrix a_chi(const SigmaMatrices& sigma, const Character& chi);
CycMatrix a_chi(const DerivedCover& c, const Character& chi);

/// The cover Y/H → X: group G/H (in Smith presentation, trivial factors
/// dropped) with voltages reduced modulo H. Throws DimensionError when a
/// generator is not an element of G.
DerivedCover quotient(const DerivedCover& c, std::span<const GroupElement> generators);

/// Kernel of a character, as the full list of its elements.
std::vector<GroupElement> character_kernel(const FiniteAbelianGroup& g, const Character& chi);

/// res: Div(Y) → Div(X), summing each fiber onto its base vertex.
IntVector res(const DerivedCover& c, std::span<const Integer> divisor_on_y);
/// cor: Div(X) → Div(Y), spreading a base coefficient across its fiber.
IntVector cor(const DerivedCover& c, std::span<const Integer> divisor_on_x);

/// Move the section to w_i' = τ_i·w_i by switching voltages:
/// g_e' = g_e + τ_tail - τ_head. The total graph is unchanged up to the
/// relabeling (v, g) ↦ (v, g - τ_v).
DerivedCover shift_section(const DerivedCover& c, std::span<const std::size_t> tau);

}  // namespace ihara
