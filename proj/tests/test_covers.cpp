#include <doctest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "ihara/errors.hpp"
#include "ihara/lfunctions.hpp"

using namespace ihara;
using namespace fixtures;

namespace {

IntMatrix sum_of(const SigmaMatrices& s) {
  IntMatrix total(s[0].rows(), s[0].cols());
  for (const auto& m : s.by_element) total = total + m;
  return total;
}

CycMatrix to_cyc(const IntMatrix& m, unsigned conductor) {
  CycMatrix out(m.rows(), std::vector<CyclotomicInteger>(m.cols(), CyclotomicInteger(conductor)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = CyclotomicInteger(conductor, m(i, j));
  return out;
}

// Y/H built directly from the H-orbits on the vertices and edges of Y.
Multigraph orbit_quotient(const DerivedCover& c, const std::vector<GroupElement>& h) {
  const auto& g = c.group();
  std::vector<std::size_t> hidx;
  for (const auto& e : h) hidx.push_back(g.index_of(e.residues));
  std::map<VertexId, std::size_t> vertex_orbit;
  std::size_t next = 0;
  for (VertexId w = 0; w < c.total().vertex_count(); ++w) {
    if (vertex_orbit.count(w)) continue;
    for (auto s : hidx) vertex_orbit[c.act(s, w)] = next;
    ++next;
  }
  std::set<std::size_t> seen;
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < c.total().edge_count(); ++e) {
    if (seen.count(e)) continue;
    for (auto s : hidx) seen.insert(c.act_on_edge(s, e));
    const Edge& y = c.total().edge(e);
    edges.push_back({vertex_orbit[y.tail], vertex_orbit[y.head]});
  }
  return Multigraph(next, edges);
}

}  // namespace

TEST_CASE("derived covers") {
  const DerivedCover c = c3_double();
  const Multigraph& y = c.total();
  CHECK(y.vertex_count() == 6);
  CHECK(y.edge_count() == 6);
  CHECK(is_connected_cover(c));
  for (VertexId v = 0; v < 6; ++v) CHECK(y.valency(v) == 2);
  CHECK(kappa(y) == 6);

  CHECK(trivial_cover(graphs::complete(4)).total() == graphs::complete(4));
  CHECK(trivial_cover(graphs::bouquet(2)).total() == graphs::bouquet(2));

  const DerivedCover split = derive(graphs::cycle(3), voltages({2}, {{0}, {0}, {0}}));
  CHECK_FALSE(is_connected_cover(split));
  CHECK_THROWS_AS(require_connected_cover(split, "test"), DisconnectedCoverError);
  CHECK_THROWS_AS(sigma_matrices(split), DisconnectedCoverError);

  const DerivedCover t = theta_double();
  CHECK(is_connected_cover(t));
  CHECK(t.total().vertex_count() == 4);
  CHECK(t.total().edge_count() == 6);
  for (VertexId v = 0; v < 4; ++v) CHECK(t.total().valency(v) == 3);
  CHECK(kappa(t.total()) == 12);
  CHECK(kappa_bruteforce(t.total()) == 12);

  CHECK_THROWS_AS(derive(graphs::cycle(3), voltages({2}, {{1}, {0}})), ValidationError);
  CHECK_THROWS_AS(derive(graphs::cycle(3), voltages({2}, {{1}, {0}, {2}})), ValidationError);
}

TEST_CASE("cover structure on random instances") {
  for (const auto& orders : std::vector<std::vector<std::int64_t>>{{3}, {2, 2}, {4}}) {
    const FiniteAbelianGroup g(orders);
    for (const auto& c : random_covers(17, g, 5, 5, 9)) {
      const auto& x = c.base();
      const auto& y = c.total();
      const std::size_t d = c.degree();
      CHECK(y.vertex_count() == d * x.vertex_count());
      CHECK(y.edge_count() == d * x.edge_count());
      CHECK(betti(y) == betti(x) + long(d - 1) * (betti(x) - 1));
      for (std::size_t e = 0; e < y.edge_count(); ++e) {
        const Edge& ye = y.edge(e);
        const Edge& xe = x.edge(e / d);
        CHECK(c.project(ye.tail) == xe.tail);
        CHECK(c.project(ye.head) == xe.head);
        for (std::size_t s = 0; s < d; ++s) {
          const Edge& moved = y.edge(c.act_on_edge(s, e));
          CHECK(moved.tail == c.act(s, ye.tail));
          CHECK(moved.head == c.act(s, ye.head));
        }
      }
      for (VertexId w = 0; w < y.vertex_count(); ++w) CHECK(y.valency(w) == x.valency(c.project(w)));
    }
  }
}

TEST_CASE("sigma matrices") {
  const auto s = sigma_matrices(theta_double());
  CHECK(s[0] == IntMatrix{{0, 2}, {2, 0}});
  CHECK(s[1] == IntMatrix{{0, 1}, {1, 0}});

  const auto triv = trivial_cover(graphs::complete(4));
  CHECK(sigma_matrices(triv)[0] == matrices(graphs::complete(4)).adjacency);
  CHECK(sum_of(sigma_matrices(c3_double())) == matrices(graphs::cycle(3)).adjacency);

  CHECK(a_chi(theta_double(), Character{{0}}) == to_cyc(matrices(graphs::theta()).adjacency, 2));
  CHECK(a_chi(theta_double(), Character{{1}}) == to_cyc(IntMatrix{{0, 1}, {1, 0}}, 2));
  CHECK(a_chi(c3_double(), Character{{1}}) == to_cyc(IntMatrix{{0, -1, 1}, {-1, 0, 1}, {1, 1, 0}}, 2));
}

TEST_CASE("sigma matrices agree with counts on the total graph") {
  std::mt19937_64 pick(6);
  for (const auto& orders : std::vector<std::vector<std::int64_t>>{{2}, {3}, {4}, {2, 2}, {6}}) {
    const FiniteAbelianGroup g(orders);
    for (const auto& c : random_covers(23, g, 6, 5, 10)) {
      const auto s = sigma_matrices(c);
      CHECK(sum_of(s) == matrices(c.base()).adjacency);
      for (std::size_t k = 0; k < g.order(); ++k) CHECK(s[k].transpose() == s[g.negate(k)]);

      std::vector<VertexId> section;
      for (VertexId v = 0; v < c.base().vertex_count(); ++v) section.push_back(c.section(v));
      const auto counted = sigma_matrices_from_section(c, section);
      for (std::size_t k = 0; k < g.order(); ++k) CHECK(counted[k] == s[k]);

      // Any other section gives conjugate data: same L-functions.
      std::vector<VertexId> other;
      std::uniform_int_distribution<std::size_t> elem(0, g.order() - 1);
      for (VertexId v = 0; v < c.base().vertex_count(); ++v) other.push_back(c.lift(v, elem(pick)));
      for (std::size_t k = 0; k < g.order(); ++k) {
        const Character chi = g.character(k);
        CHECK(l_reciprocal(c, chi, other).reciprocal == l_reciprocal(c, chi).reciprocal);
      }
    }
  }
}

TEST_CASE("switching the section leaves L-functions unchanged") {
  std::mt19937_64 rng(44);
  for (const auto& orders : std::vector<std::vector<std::int64_t>>{{3}, {2, 2}, {4}}) {
    const FiniteAbelianGroup g(orders);
    for (const auto& c : random_covers(29, g, 4, 5, 9)) {
      std::vector<std::size_t> tau(c.base().vertex_count());
      std::uniform_int_distribution<std::size_t> elem(0, g.order() - 1);
      for (auto& t : tau) t = elem(rng);
      const DerivedCover shifted = shift_section(c, tau);
      CHECK(kappa(shifted.total()) == kappa(c.total()));
      for (std::size_t k = 0; k < g.order(); ++k)
        CHECK(l_reciprocal(shifted, g.character(k)).reciprocal == l_reciprocal(c, g.character(k)).reciprocal);
      CHECK(theta_element(shifted).value == theta_element(c).value);
    }
  }
}

TEST_CASE("quotients") {
  const DerivedCover c = k4_klein();
  const auto& g = c.group();
  std::vector<GroupElement> all;
  for (std::size_t i = 0; i < g.order(); ++i) all.push_back(g.element(i));

  const DerivedCover full = quotient(c, all);
  CHECK(full.degree() == 1);
  CHECK(full.total() == c.base());

  const std::vector<GroupElement> none{GroupElement{{0, 0}}};
  const DerivedCover same = quotient(c, none);
  CHECK(same.group() == g);
  CHECK(same.total() == c.total());

  const std::vector<GroupElement> first{GroupElement{{1, 0}}};
  const DerivedCover second = quotient(c, first);
  CHECK(second.group() == FiniteAbelianGroup({2}));
  for (std::size_t e = 0; e < c.base().edge_count(); ++e)
    CHECK(second.voltage().voltages[e].residues == Residues{c.voltage().voltages[e].residues[1]});

  CHECK_THROWS_AS(quotient(c, std::vector<GroupElement>{GroupElement{{3, 0}}}), DimensionError);
}

TEST_CASE("quotient commutes with deriving the cover") {
  for (const auto& orders : std::vector<std::vector<std::int64_t>>{{4}, {6}, {2, 2}, {2, 4}}) {
    const FiniteAbelianGroup g(orders);
    for (const auto& c : random_covers(37, g, 4, 4, 8)) {
      for (std::size_t k = 0; k < g.order(); ++k) {
        const std::vector<GroupElement> h{g.element(k)};
        const DerivedCover q = quotient(c, h);
        std::vector<GroupElement> span{g.element(0)};
        for (std::size_t cur = k; cur != 0; cur = g.add(cur, k)) span.push_back(g.element(cur));
        const Multigraph direct = orbit_quotient(c, span);
        CHECK(q.total().vertex_count() == direct.vertex_count());
        CHECK(q.total().edge_count() == direct.edge_count());
        CHECK(kappa(q.total()) == kappa(direct));
        CHECK(zeta_reciprocal(q.total()).reciprocal == zeta_reciprocal(direct).reciprocal);
      }
    }
  }
}

TEST_CASE("character kernels") {
  const FiniteAbelianGroup g({2, 2});
  const auto ker = character_kernel(g, Character{{1, 1}});
  REQUIRE(ker.size() == 2);
  CHECK(ker[0].residues == Residues{0, 0});
  CHECK(ker[1].residues == Residues{1, 1});
  CHECK(character_kernel(g, Character{{0, 0}}).size() == 4);
  CHECK(character_kernel(FiniteAbelianGroup({6}), Character{{2}}).size() == 2);
}

TEST_CASE("restriction and corestriction") {
  const DerivedCover c = c3_double();
  const IntVector e0{1, 0, 0};
  CHECK(res(c, cor(c, e0)) == IntVector{2, 0, 0});
  CHECK(res(c, IntVector(6, 1)) == IntVector{2, 2, 2});
  IntVector w0(6, 0);
  w0[0] = 1;
  IntVector expected(6, 0);
  for (std::size_t s = 0; s < c.degree(); ++s) expected[c.act(s, 0)] += 1;
  CHECK(cor(c, res(c, w0)) == expected);
  CHECK_THROWS_AS(res(c, e0), DimensionError);
}
