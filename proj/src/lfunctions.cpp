#include "ihara/lfunctions.hpp"

#include <sstream>

#include "ihara/errors.hpp"

namespace ihara {

namespace {

constexpr ValidationFlags kZetaFlags{.connected = true, .no_degree_one = true};

// (1 - u²)^k
IntPoly one_minus_u_squared(long k) { return IntPoly{1, 0, -1}.pow(static_cast<unsigned>(k)); }

LData l_from_sigma(const DerivedCover& c, const Character& chi, const SigmaMatrices& sigma) {
  const Multigraph& x = c.base();
  const unsigned m = c.group().exponent();
  const std::size_t n = x.vertex_count();
  const CycMatrix a = a_chi(sigma, chi);

  CycPolyMatrix entries(n, std::vector<CycPoly>(n, CycPoly(m)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<CyclotomicInteger> coeffs(3, CyclotomicInteger(m));
      coeffs[1] = -a[i][j];
      if (i == j) {
        coeffs[0] = CyclotomicInteger(m, 1);
        coeffs[2] = CyclotomicInteger(m, static_cast<long>(x.valency(i)) - 1);
      }
      entries[i][j] = CycPoly(m, std::move(coeffs));
    }
  const CycPoly reciprocal =
      CycPoly::from_int_poly(m, one_minus_u_squared(betti(x) - 1)) *
      cyc_poly_matrix_det(entries, m);
  auto [order, lead] = taylor_at_one(reciprocal);
  return LData{chi, reciprocal, order, lead};
}

void require_l_preconditions(const DerivedCover& c, const char* what) {
  require_connected_cover(c, what);
  require(c.base(), kZetaFlags);
}

}  // namespace

ZetaData zeta_reciprocal(const Multigraph& x) {
  require(x, kZetaFlags);
  const std::size_t n = x.vertex_count();
  const GraphMatrices gm = matrices(x);
  PolyMatrix entries(n, std::vector<IntPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Integer d = (i == j) ? gm.degree(i, i) - 1 : Integer(0);
      entries[i][j] = IntPoly(IntVector{Integer(i == j ? 1 : 0), -gm.adjacency(i, j), d});
    }
  const long r = betti(x);
  ZetaData z{one_minus_u_squared(r - 1) * poly_matrix_det(entries), r, 0, 0};
  auto [order, lead] = taylor_at_one(z.reciprocal);
  z.order = order;
  z.lead = lead;
  return z;
}

IntPoly zeta_reciprocal_hashimoto(const Multigraph& x) {
  require(x, kZetaFlags);
  // Directed edge 2k runs tail → head of edge k, 2k + 1 runs back.
  const std::size_t m = 2 * x.edge_count();
  auto tail = [&](std::size_t e) { return e % 2 ? x.edge(e / 2).head : x.edge(e / 2).tail; };
  auto head = [&](std::size_t e) { return e % 2 ? x.edge(e / 2).tail : x.edge(e / 2).head; };
  PolyMatrix entries(m, std::vector<IntPoly>(m));
  for (std::size_t e = 0; e < m; ++e)
    for (std::size_t f = 0; f < m; ++f) {
      const bool step = head(e) == tail(f) && f != (e ^ 1u);
      entries[e][f] = IntPoly{e == f ? 1 : 0, step ? -1 : 0};
    }
  return poly_matrix_det(entries);
}

LData l_reciprocal(const DerivedCover& c, const Character& chi) {
  require_l_preconditions(c, "l_reciprocal");
  return l_from_sigma(c, chi, sigma_matrices(c));
}

LData l_reciprocal(const DerivedCover& c, const Character& chi,
                   std::span<const VertexId> section) {
  require_l_preconditions(c, "l_reciprocal");
  return l_from_sigma(c, chi, sigma_matrices_from_section(c, section));
}

std::vector<LData> all_l_functions(const DerivedCover& c) {
  require_l_preconditions(c, "l_reciprocal");
  const SigmaMatrices sigma = sigma_matrices(c);
  std::vector<LData> out;
  out.reserve(c.degree());
  for (std::size_t k = 0; k < c.degree(); ++k)
    out.push_back(l_from_sigma(c, c.group().character(k), sigma));
  return out;
}

GroupRingMatrix theta_matrix(const DerivedCover& c) {
  const auto& g = c.group();
  const std::size_t n = c.base().vertex_count();
  // ρ_w(w0) is the (w, w0) entry of the Laplacian of Y.
  const IntMatrix q = matrices(c.total()).laplacian;
  GroupRingMatrix out(n, std::vector<GroupRingElement>(n, GroupRingElement(g)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t s = 0; s < g.order(); ++s)
        out[i][j].coeff(g.negate(s)) += q(c.section(i), c.act(s, c.section(j)));
  return out;
}

ThetaElement theta_element(const DerivedCover& c) {
  return theta_element(c, all_l_functions(c));
}

ThetaElement theta_element(const DerivedCover& c, std::span<const LData> l_functions) {
  require_l_preconditions(c, "theta_element");
  const auto& g = c.group();
  if (l_functions.size() != g.order())
    throw DimensionError("theta_element: one L-function per character expected");

  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(betti(c.base()) - 1));
  if ((betti(c.base()) - 1) % 2) scale = -scale;
  ThetaElement theta{gr_det(theta_matrix(c), g) * scale};

  for (std::size_t k = 0; k < g.order(); ++k) {
    const Character chi = g.character(k);
    const CyclotomicInteger image = gr_apply_char(theta.value, chi);
    const CyclotomicInteger expected =
        is_trivial(chi) ? CyclotomicInteger(g.exponent())
                        : l_functions[g.index_of(conj(g, chi).exponents)].lead;
    if (!(image == expected)) {
      std::ostringstream os;
      os << "theta_element: character image " << image << " differs from L*(1, conj chi) "
         << expected << " at character index " << k;
      throw ConsistencyError(os.str());
    }
  }
  return theta;
}

bool product_check(const DerivedCover& c) { return product_check(c, all_l_functions(c)); }

bool product_check(const DerivedCover& c, std::span<const LData> l_functions) {
  require_l_preconditions(c, "product_check");
  const unsigned m = c.group().exponent();
  CycPoly product = CycPoly::from_int_poly(m, zeta_reciprocal(c.base()).reciprocal);
  for (const auto& l : l_functions)
    if (!is_trivial(l.character)) product = product * l.reciprocal;
  if (!product.has_rational_coefficients()) return false;
  return product.to_int_poly() == zeta_reciprocal(c.total()).reciprocal;
}

}  // namespace ihara
