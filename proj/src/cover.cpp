#include "ihara/cover.hpp"

#include "ihara/errors.hpp"

namespace ihara {

namespace {

Multigraph build_total(const Multigraph& base, const FiniteAbelianGroup& g,
                       const std::vector<std::size_t>& voltage_idx) {
  const std::size_t d = g.order();
  std::vector<Edge> edges;
  edges.reserve(base.edge_count() * d);
  for (std::size_t e = 0; e < base.edge_count(); ++e) {
    const Edge& be = base.edge(e);
    for (std::size_t h = 0; h < d; ++h)
      edges.push_back({be.tail * d + h, be.head * d + g.add(h, voltage_idx[e])});
  }
  return Multigraph(base.vertex_count() * d, std::move(edges));
}

std::vector<std::size_t> voltage_indices(const Multigraph& base, const VoltageAssignment& v) {
  if (v.voltages.size() != base.edge_count())
    throw ValidationError("voltage count " + std::to_string(v.voltages.size()) +
                          " does not match edge count " + std::to_string(base.edge_count()));
  std::vector<std::size_t> idx;
  idx.reserve(v.voltages.size());
  for (const auto& g : v.voltages) {
    if (!v.group.contains(g.residues)) throw ValidationError("voltage is not an element of the group");
    idx.push_back(v.group.index_of(g.residues));
  }
  return idx;
}

}  // namespace

DerivedCover::DerivedCover(Multigraph base, VoltageAssignment voltage)
    : base_(std::move(base)),
      voltage_(std::move(voltage)),
      voltage_idx_(voltage_indices(base_, voltage_)),
      total_(build_total(base_, voltage_.group, voltage_idx_)) {}

VertexId DerivedCover::act(std::size_t sigma, VertexId w) const {
  return lift(project(w), group().add(fiber_element(w), sigma));
}

std::size_t DerivedCover::act_on_edge(std::size_t sigma, std::size_t edge) const {
  const std::size_t d = degree();
  return (edge / d) * d + group().add(edge % d, sigma);
}

DerivedCover derive(const Multigraph& base, VoltageAssignment voltage) {
  return DerivedCover(base, std::move(voltage));
}

bool is_connected_cover(const DerivedCover& c) { return c.total().is_connected(); }

void require_connected_cover(const DerivedCover& c, const char* what) {
  if (!is_connected_cover(c))
    throw DisconnectedCoverError(std::string(what) + ": derived cover is disconnected");
}

SigmaMatrices sigma_matrices(const DerivedCover& c) {
  require_connected_cover(c, "sigma_matrices");
  const auto& g = c.group();
  const std::size_t n = c.base().vertex_count();
  SigmaMatrices out{g, std::vector<IntMatrix>(g.order(), IntMatrix(n, n))};
  for (std::size_t e = 0; e < c.base().edge_count(); ++e) {
    const Edge& be = c.base().edge(e);
    const std::size_t s = c.voltage_index(e);
    out.by_element[s](be.tail, be.head) += 1;
    out.by_element[g.negate(s)](be.head, be.tail) += 1;
  }
  return out;
}

SigmaMatrices sigma_matrices_from_section(const DerivedCover& c,
                                          std::span<const VertexId> section) {
  const std::size_t n = c.base().vertex_count();
  if (section.size() != n) throw DimensionError("section must have one vertex per base vertex");
  for (std::size_t i = 0; i < n; ++i)
    if (c.project(section[i]) != i) throw DimensionError("section vertex outside its fiber");
  const auto& g = c.group();
  SigmaMatrices out{g, std::vector<IntMatrix>(g.order(), IntMatrix(n, n))};
  // Position of each section vertex's translate: σ·w_j = (j, τ_j + σ).
  for (const auto& e : c.total().edges()) {
    const VertexId a = e.tail, b = e.head;
    const std::size_t ia = c.project(a), ib = c.project(b);
    // Edge a-b contributes to a_{ia,ib}(σ) when a = w_ia and b = σ·w_ib.
    auto offset = [&](VertexId w, std::size_t i) {
      return g.add(c.fiber_element(w), g.negate(c.fiber_element(section[i])));
    };
    if (a == section[ia]) out.by_element[offset(b, ib)](ia, ib) += 1;
    if (b == section[ib]) out.by_element[offset(a, ia)](ib, ia) += 1;
  }
  return out;
}

CycMatrix a_chi(const SigmaMatrices& sigma, const Character& chi) {
  const auto& g = sigma.group;
  const unsigned m = g.exponent();
  const std::size_t n = sigma.by_element.empty() ? 0 : sigma[0].rows();
  CycMatrix out(n, std::vector<CyclotomicInteger>(n, CyclotomicInteger(m)));
  for (std::size_t s = 0; s < g.order(); ++s) {
    const CyclotomicInteger value = char_eval(g, chi, g.element(s).residues);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (sigma[s](i, j) != 0) out[i][j] += value * sigma[s](i, j);
  }
  return out;
}

CycMatrix a_chi(const DerivedCover& c, const Character& chi) {
  return a_chi(sigma_matrices(c), chi);
}

DerivedCover quotient(const DerivedCover& c, std::span<const GroupElement> generators) {
  const auto& g = c.group();
  const std::size_t k = g.rank();
  for (const auto& h : generators)
    if (!g.contains(h.residues)) throw DimensionError("subgroup generator is not an element of G");

  // Relations of G/H: n_i·e_i and the generators of H.
  IntMatrix relations(k, k + generators.size());
  for (std::size_t i = 0; i < k; ++i) relations(i, i) = static_cast<long>(g.cyclic_orders()[i]);
  for (std::size_t j = 0; j < generators.size(); ++j)
    for (std::size_t i = 0; i < k; ++i) relations(i, k + j) = static_cast<long>(generators[j].residues[i]);
  const SmithForm snf = smith_normal_form(relations);

  std::vector<std::size_t> kept;
  std::vector<std::int64_t> orders;
  for (std::size_t i = 0; i < k; ++i) {
    if (snf.diagonal[i] == 1) continue;
    kept.push_back(i);
    orders.push_back(snf.diagonal[i].get_si());
  }
  FiniteAbelianGroup q(orders);

  VoltageAssignment reduced{q, {}};
  for (const auto& v : c.voltage().voltages) {
    IntVector x(v.residues.begin(), v.residues.end());
    const IntVector y = snf.U * std::span<const Integer>(x);
    Residues r;
    for (std::size_t t = 0; t < kept.size(); ++t) {
      Integer mod;
      mpz_fdiv_r(mod.get_mpz_t(), y[kept[t]].get_mpz_t(), snf.diagonal[kept[t]].get_mpz_t());
      r.push_back(mod.get_si());
    }
    reduced.voltages.push_back({std::move(r)});
  }
  return DerivedCover(c.base(), std::move(reduced));
}

std::vector<GroupElement> character_kernel(const FiniteAbelianGroup& g, const Character& chi) {
  std::vector<GroupElement> out;
  for (std::size_t s = 0; s < g.order(); ++s) {
    GroupElement el = g.element(s);
    if (char_exponent(g, chi, el.residues) == 0) out.push_back(std::move(el));
  }
  return out;
}

IntVector res(const DerivedCover& c, std::span<const Integer> divisor_on_y) {
  if (divisor_on_y.size() != c.total().vertex_count())
    throw DimensionError("res: divisor length does not match |V_Y|");
  IntVector out(c.base().vertex_count());
  for (VertexId w = 0; w < divisor_on_y.size(); ++w) out[c.project(w)] += divisor_on_y[w];
  return out;
}

IntVector cor(const DerivedCover& c, std::span<const Integer> divisor_on_x) {
  if (divisor_on_x.size() != c.base().vertex_count())
    throw DimensionError("cor: divisor length does not match |V_X|");
  IntVector out(c.total().vertex_count());
  for (VertexId w = 0; w < out.size(); ++w) out[w] = divisor_on_x[c.project(w)];
  return out;
}

DerivedCover shift_section(const DerivedCover& c, std::span<const std::size_t> tau) {
  const auto& g = c.group();
  if (tau.size() != c.base().vertex_count())
    throw DimensionError("shift_section: one translation per base vertex");
  VoltageAssignment shifted{g, {}};
  for (std::size_t e = 0; e < c.base().edge_count(); ++e) {
    const Edge& be = c.base().edge(e);
    const std::size_t s = g.add(g.add(c.voltage_index(e), tau[be.tail]), g.negate(tau[be.head]));
    shifted.voltages.push_back(g.element(s));
  }
  return DerivedCover(c.base(), std::move(shifted));
}

}  // namespace ihara
