#pragma once

#include <span>
#include <vector>

#include "ihara/abelian_group.hpp"
#include "ihara/cover.hpp"
#include "ihara/cyclotomic.hpp"
#include "ihara/group_ring.hpp"
#include "ihara/int_poly.hpp"
#include "ihara/multigraph.hpp"

namespace ihara {

/// 1/ζ_X(u) and its behaviour at u = 1. `lead` is the first nonvanishing
/// Taylor coefficient (derivative of order `order` divided by order!).
struct ZetaData {
  IntPoly reciprocal;
  long betti;
  unsigned order;
  Integer lead;
};

/// (1 - u²)^{r-1}·det(I - A·u + (D - I)·u²). Throws ValidationError unless X
/// is connected with minimum valency 2.
ZetaData zeta_reciprocal(const Multigraph& x);

/// det(I - u·W) for the non-backtracking matrix W on the 2|E| directed
/// edges: W_{ef} = 1 when head(e) = tail(f) and f is not the reversal of e.
/// Same preconditions as zeta_reciprocal.
IntPoly zeta_reciprocal_hashimoto(const Multigraph& x);

/// 1/L(u, χ) over Z[ζ_m], m = exponent(G), and its behaviour at u = 1.
struct LData {
  Character character;
  CycPoly reciprocal;
  unsigned order;
  CyclotomicInteger lead;
};

/// 1/L(u, χ) = (1 - u²)^{r_X - 1}·det(I - A_χ·u + (D - I)·u²).
/// Throws DisconnectedCoverError for a disconnected cover and
/// ValidationError when the base fails validation.
LData l_reciprocal(const DerivedCover& c, const Character& chi);

/// Same, with A(σ) read off the total graph for an arbitrary section.
LData l_reciprocal(const DerivedCover& c, const Character& chi,
                   std::span<const VertexId> section);

/// Every character in index order.
std::vector<LData> all_l_functions(const DerivedCover& c);

/// θ*(1)·e as an element of Z[G].
struct ThetaElement {
  GroupRingElement value;
};

/// (-2)^{r_X - 1}·det_{Z[G]}(ℓ_i(w_j)) with
/// ℓ_i(w_j) = Σ_σ ρ_{w_i}(σ·w_j)·σ^{-1}, ρ read off the Laplacian of Y.
/// Every character image is checked against the L-function leads
/// (χ(θ) = L*(1, χ̄), and 0 at χ trivial); a mismatch raises
/// ConsistencyError.
ThetaElement theta_element(const DerivedCover& c);
/// Same, cross-checking against precomputed all_l_functions(c).
ThetaElement theta_element(const DerivedCover& c, std::span<const LData> l_functions);

/// The n×n matrix (ℓ_i(w_j)) over Z[G].
GroupRingMatrix theta_matrix(const DerivedCover& c);

/// 1/ζ_X · Π_{χ≠1} 1/L(u, χ) computed in Z[ζ_m][u] equals 1/ζ_Y computed
/// directly on the total graph.
bool product_check(const DerivedCover& c);
bool product_check(const DerivedCover& c, std::span<const LData> l_functions);

}  // namespace ihara
