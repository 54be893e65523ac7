// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "ihara/lfunctions.hpp"
#include "ihara/verifier.hpp"

using namespace ihara;
using namespace fixtures;

namespace {

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

Integer pow_int(long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), std::labs(base), e);
  return base < 0 && e % 2 ? Integer(-r) : r;
}

// 200 connected multigraphs, min valency 2, r >= 2, at most 6 vertices and 12 edges.
const std::vector<Multigraph>& graph_corpus() {
  static const std::vector<Multigraph> corpus = [] {
    std::vector<Multigraph> out;
    Rng rng(0x5eed0001);
    while (out.size() < 200) {
      const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
      const std::size_t m = std::uniform_int_distribution<std::size_t>(n + 1, 12)(rng);
      out.push_back(random_multigraph(rng, {n, m, true}));
    }
    return out;
  }();
  return corpus;
}

// 100 connected covers: 20 each over Z/2, Z/3, Z/4, Z/2×Z/2, Z/6, base at
// most 5 vertices and 10 edges.
const std::vector<DerivedCover>& cover_corpus() {
  static const std::vector<DerivedCover> corpus = [] {
    std::vector<DerivedCover> out;
    const std::vector<std::vector<std::int64_t>> groups{{2}, {3}, {4}, {2, 2}, {6}};
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (auto& c : random_covers(0x5eed0100 + i, FiniteAbelianGroup(groups[i]), 20, 5, 10))
        out.push_back(std::move(c));
    return out;
  }();
  return corpus;
}

const std::vector<std::vector<LData>>& corpus_l_functions() {
  static const std::vector<std::vector<LData>> ls = [] {
    std::vector<std::vector<LData>> out;
    for (const auto& c : cover_corpus()) out.push_back(all_l_functions(c));
    return out;
  }();
  return ls;
}

std::string label(const DerivedCover& c) {
  std::string s = "cover on " + std::to_string(c.base().vertex_count()) + " vertices, " +
                  std::to_string(c.base().edge_count()) + " edges, G = (";
  for (auto n : c.group().cyclic_orders()) s += std::to_string(n) + ",";
  s.back() = ')';
  return s;
}

Tally cycles() {
  Tally t;
  for (std::size_t n = 3; n <= 10; ++n) {
    const ZetaData z = zeta_reciprocal(graphs::cycle(n));
    const IntPoly expected = (IntPoly{1} - IntPoly::monomial(1, n)).pow(2);
    t.expect(z.reciprocal == expected && z.order == 2 && z.lead == Integer(n * n),
             "C_" + std::to_string(n));
  }
  return t;
}

Tally dirichlet() {
  Tally t;
  for (const auto& x : graph_corpus()) {
    const long r = betti(x);
    const Integer k = kappa(x);
    const ZetaData z = zeta_reciprocal(x);
    const Integer expected = pow_int(-1, r + 1) * pow_int(2, r) * (r - 1) * k;
    t.expect(z.order == unsigned(r) && z.lead == expected, "lead/order on a corpus graph");
    t.expect(k == kappa_bruteforce(x), "kappa against enumeration");
  }
  return t;
}

Tally hashimoto() {
  Tally t;
  for (const auto& x : graph_corpus())
    t.expect(zeta_reciprocal_hashimoto(x) == zeta_reciprocal(x).reciprocal, "edge-matrix determinant");
  return t;
}

Tally kirchhoff() {
  Tally t;
  for (const auto& x : graph_corpus()) {
    const Integer k = kappa(x);
    const IntMatrix adj = adjugate(matrices(x).laplacian);
    bool all = true;
    for (std::size_t i = 0; i < adj.rows(); ++i)
      for (std::size_t j = 0; j < adj.cols(); ++j) all = all && adj(i, j) == k;
    t.expect(all, "adjugate entries");
    t.expect(jacobian(x).order == k, "invariant factor product");
  }
  return t;
}

Tally factorization() {
  Tally t;
  const auto& covers = cover_corpus();
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const auto& c = covers[i];
    t.expect(product_check(c, corpus_l_functions()[i]), "product identity, " + label(c));
    const unsigned r = unsigned(betti(c.base()));
    for (const auto& l : corpus_l_functions()[i])
      if (!is_trivial(l.character)) t.expect(l.order == r - 1, "r(chi), " + label(c));
  }
  return t;
}

Tally equivariant() {
  Tally t;
  const auto& covers = cover_corpus();
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const auto& c = covers[i];
    const auto& g = c.group();
    const GroupRingElement theta = gr_det(theta_matrix(c), g) * pow_int(-2, betti(c.base()) - 1);
    for (const auto& l : corpus_l_functions()[i]) {
      // χ̄(θ) against L*(1, χ).
      const CyclotomicInteger image = gr_apply_char(theta, conj(g, l.character));
      t.expect(is_trivial(l.character) ? image.is_zero() : image == l.lead, "character image, " + label(c));
    }
    t.expect(theta_element(c, corpus_l_functions()[i]).value == theta, "theta_element, " + label(c));
  }
  const FiniteAbelianGroup z2({2});
  const auto one = GroupRingElement::one(z2), sigma = GroupRingElement::basis(z2, 1);
  t.expect(theta_element(c3_double()).value == one * Integer(2) - sigma * Integer(2), "C_3 -> C_6");
  t.expect(theta_element(theta_double()).value == sigma * Integer(8) - one * Integer(8), "theta graph");
  return t;
}

Tally annihilation() {
  Tally t;
  for (const auto& c : cover_corpus()) t.expect(verify_annihilation(c).passed(), label(c));
  return t;
}

Tally lattice_index() {
  Tally t;
  const auto& covers = cover_corpus();
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const auto& c = covers[i];
    const ThetaElement theta = theta_element(c, corpus_l_functions()[i]);
    const Outcome o = verify_index(c, theta, corpus_l_functions()[i]);
    t.expect(o.passed() && o.detail["routes_agree"] == true, label(c));
  }
  for (std::size_t n = 3; n <= 8; ++n)
    for (std::int64_t d = 2; d <= 6; ++d) {
      const Outcome o = verify_index(cycle_cover(n, d));
      t.expect(o.passed() && o.detail["index"] == d,
               "C_" + std::to_string(n) + " -> C_" + std::to_string(n * d));
    }
  return t;
}

// κ_Y·κ_X^{2^m-2} = 2^{2^m-m-1}·Π κ_i, with each intermediate double cover
// rebuilt from the Z/2 voltages χ(g_e).
bool kuroda_identity(const DerivedCover& c) {
  const auto& g = c.group();
  const std::size_t m = g.rank();
  const Integer kx = kappa(c.base());
  Integer product = 1;
  for (std::size_t k = 1; k < g.order(); ++k) {
    const Character chi = g.character(k);
    VoltageAssignment v{FiniteAbelianGroup({2}), {}};
    for (const auto& ge : c.voltage().voltages) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < m; ++i) s += chi.exponents[i] * ge.residues[i];
      v.voltages.push_back(GroupElement{{s % 2}});
    }
    const DerivedCover xi = derive(c.base(), v);
    if (!is_connected_cover(xi)) return false;
    product *= kappa(xi.total());
  }
  const unsigned long twos = (1ul << m) - m - 1;
  return kappa(c.total()) * pow_int(kx.get_si(), (1ul << m) - 2) == pow_int(2, twos) * product;
}

// Seeded (Z/2)^m covers whose total graph and intermediate covers are connected.
std::vector<DerivedCover> klein_covers(std::uint64_t seed, std::size_t m, std::size_t count,
                                       const std::function<Multigraph(Rng&)>& base) {
  std::vector<DerivedCover> out;
  Rng rng(seed);
  const FiniteAbelianGroup g(std::vector<std::int64_t>(m, 2));
  while (out.size() < count) {
    const Multigraph x = base(rng);
    DerivedCover c = derive(x, random_voltages(rng, g, x.edge_count()));
    if (!is_connected_cover(c)) continue;
    bool intermediates = true;
    for (std::size_t k = 1; k < g.order() && intermediates; ++k)
      intermediates = is_connected_cover(quotient(c, character_kernel(g, g.character(k))));
    if (intermediates) out.push_back(std::move(c));
  }
  return out;
}

std::vector<DerivedCover>& kuroda_corpus() {
  static std::vector<DerivedCover> corpus = [] {
    std::vector<DerivedCover> out = klein_covers(0x5eed0200, 2, 15, [](Rng&) { return graphs::complete(4); });
    for (auto& c : klein_covers(0x5eed0201, 2, 15, [](Rng& r) {
           const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 5)(r);
           return random_multigraph(r, {n, n + 3, true});
         }))
      out.push_back(std::move(c));
    for (auto& c : klein_covers(0x5eed0300, 3, 10, [](Rng& r) {
           const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 4)(r);
           return random_multigraph(r, {n, n + 4, true});
         }))
      out.push_back(std::move(c));
    return out;
  }();
  return corpus;
}

Tally kuroda() {
  Tally t;
  for (const auto& c : kuroda_corpus()) {
    t.expect(kuroda_identity(c), "tree-number identity, " + label(c));
    t.expect(verify_kuroda(c).passed(), "verify_kuroda, " + label(c));
  }
  return t;
}

Tally kernel_order() {
  Tally t;
  auto check = [&](const DerivedCover& c) {
    const Integer kx = kappa(c.base()), ky = kappa(c.total());
    t.expect(ky % kx == 0, "divisibility, " + label(c));
    t.expect(jac0_order(c) * kx == ky, "Jac0 order, " + label(c));
  };
  for (const auto& c : cover_corpus()) check(c);
  for (const auto& c : kuroda_corpus()) check(c);
  t.expect(jac0_order(c3_double()) == 2, "C_3 -> C_6");
  t.expect(jac0_order(theta_double()) == 4, "theta graph");
  return t;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Tally()>>> criteria{
      {"cycle graphs C_3..C_10: (1-u^n)^2, ord 2, lead n^2", cycles},
      {"Dirichlet analogue on 200 random graphs, kappa by enumeration", dirichlet},
      {"three-term zeta equals the non-backtracking determinant", hashimoto},
      {"adjugate(Q) = kappa J and |Jac| = kappa", kirchhoff},
      {"zeta_Y = zeta_X * prod L on 100 covers, r(chi) = r_X - 1", factorization},
      {"theta character images equal L*(1, chi-bar), worked values", equivariant},
      {"theta annihilates Pic on every vertex", annihilation},
      {"index of theta Z[G] in I_G, including C_n -> C_dn", lattice_index},
      {"Kuroda tree-number relations for (Z/2)^2 and (Z/2)^3", kuroda},
      {"kappa_X | kappa_Y and |Jac0(Y)| = kappa_Y / kappa_X", kernel_order},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = criteria[i].second();
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    const bool ok = t.failures == 0;
    all = all && ok;
    std::printf("criterion %2zu: %s  %s  [%zu checks, %lld ms]\n", i + 1, ok ? "PASS" : "FAIL", criteria[i].first,
                t.cases, static_cast<long long>(ms));
    if (!ok) std::printf("              %zu failed, first: %s\n", t.failures, t.first_failure.c_str());
  }
  return all ? 0 : 1;
}
