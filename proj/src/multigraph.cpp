#include "ihara/multigraph.hpp"

#include <cstdint>
#include <numeric>
#include <sstream>

#include "ihara/errors.hpp"

namespace ihara {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

void require_connected(const Multigraph& g, const char* what) {
  if (!g.is_connected()) throw ValidationError(std::string(what) + ": graph is not connected");
}

}  // namespace

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ == 0) throw DimensionError("a multigraph needs at least one vertex");
  for (const auto& e : edges_)
    if (e.tail >= n_ || e.head >= n_) throw DimensionError("edge endpoint out of range");
}

std::size_t Multigraph::valency(VertexId v) const {
  std::size_t d = 0;
  for (const auto& e : edges_) d += (e.tail == v) + (e.head == v);
  return d;
}

bool Multigraph::is_connected() const {
  DisjointSets sets(n_);
  std::size_t components = n_;
  for (const auto& e : edges_)
    if (sets.unite(e.tail, e.head)) --components;
  return components == 1;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) os << (i ? "; " : "") << violations[i].message;
  return os.str();
}

ValidationReport validate(const Multigraph& g, ValidationFlags flags) {
  ValidationReport report;
  if (flags.connected && !g.is_connected())
    report.violations.push_back({Requirement::Connected, std::nullopt, "graph is not connected"});
  if (flags.no_degree_one) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const std::size_t d = g.valency(v);
      if (d < 2) {
        report.violations.push_back({Requirement::NoDegreeOne, v,
                                     "vertex " + std::to_string(v) + " has valency " +
                                         std::to_string(d) + " (minimum valency 2 required)"});
      }
    }
  }
  return report;
}

void require(const Multigraph& g, ValidationFlags flags) {
  ValidationReport report = validate(g, flags);
  if (!report.ok()) throw ValidationError(report.summary());
}

GraphMatrices matrices(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  GraphMatrices m{IntMatrix(n, n), IntMatrix(n, n), IntMatrix()};
  for (const auto& e : g.edges()) {
    m.adjacency(e.tail, e.head) += 1;
    m.adjacency(e.head, e.tail) += 1;
  }
  for (VertexId v = 0; v < n; ++v) m.degree(v, v) = static_cast<unsigned long>(g.valency(v));
  m.laplacian = m.degree - m.adjacency;
  return m;
}

long betti(const Multigraph& g) {
  require_connected(g, "betti");
  return static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count()) + 1;
}

Integer kappa(const Multigraph& g) {
  require_connected(g, "kappa");
  if (g.vertex_count() == 1) return 1;
  return int_det(matrices(g).laplacian.minor_matrix(0, 0));
}

Integer kappa_bruteforce(const Multigraph& g) {
  require_connected(g, "kappa_bruteforce");
  if (g.edge_count() > 20) throw DimensionError("kappa_bruteforce: more than 20 edges");
  std::vector<Edge> candidates;
  for (const auto& e : g.edges())
    if (!e.is_loop()) candidates.push_back(e);
  const std::size_t n = g.vertex_count();
  const std::size_t need = n - 1;
  const std::size_t m = candidates.size();
  if (need == 0) return 1;

  Integer count = 0;
  // Gosper's hack over all m-bit masks with `need` bits set.
  if (need > m) return 0;
  std::uint32_t mask = (std::uint32_t{1} << need) - 1;
  const std::uint32_t limit = std::uint32_t{1} << m;
  while (mask < limit) {
    DisjointSets sets(n);
    bool forest = true;
    for (std::size_t i = 0; i < m && forest; ++i)
      if (mask & (std::uint32_t{1} << i)) forest = sets.unite(candidates[i].tail, candidates[i].head);
    if (forest) ++count;  // n-1 edges without a cycle span the graph
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  return count;
}

JacobianStructure jacobian(const Multigraph& g) {
  require_connected(g, "jacobian");
  JacobianStructure jac;
  jac.order = 1;
  const SmithForm snf = smith_normal_form(matrices(g).laplacian);
  for (const auto& d : snf.diagonal) {
    if (d == 0) continue;
    jac.invariant_factors.push_back(d);
    jac.order *= d;
  }
  if (jac.invariant_factors.size() + 1 != g.vertex_count())
    throw ConsistencyError("jacobian: Laplacian rank is not n - 1");
  return jac;
}

namespace graphs {

Multigraph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Multigraph(n, std::move(edges));
}

Multigraph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Multigraph(n, std::move(edges));
}

Multigraph theta(std::size_t k) {
  return Multigraph(2, std::vector<Edge>(k, Edge{0, 1}));
}

Multigraph bouquet(std::size_t loops) {
  return Multigraph(1, std::vector<Edge>(loops, Edge{0, 0}));
}

}  // namespace graphs

}  // namespace ihara
