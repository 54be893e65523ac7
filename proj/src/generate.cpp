#include "ihara/generate.hpp"

#include <algorithm>
#include <numeric>

#include "ihara/errors.hpp"

namespace ihara {

namespace {

std::size_t uniform(Rng& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

}  // namespace

Multigraph random_multigraph(Rng& rng, GraphShape shape) {
  const std::size_t n = shape.vertices;
  if (n == 0) throw MisuseError("random_multigraph: need at least one vertex");
  if (shape.edges < n) throw MisuseError("random_multigraph: minimum valency 2 needs |E| >= |V|");
  if (n == 1 && !shape.loops) throw MisuseError("random_multigraph: one vertex needs loops");

  constexpr int kAttempts = 10000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Edge> edges;
    for (std::size_t k = 1; k < n; ++k) edges.push_back({order[k], order[uniform(rng, k)]});
    while (edges.size() < shape.edges) {
      const std::size_t a = uniform(rng, n);
      const std::size_t b = uniform(rng, n);
      if (a == b && !shape.loops) continue;
      edges.push_back({a, b});
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    for (auto& e : edges)
      if (uniform(rng, 2)) std::swap(e.tail, e.head);
    Multigraph g(n, std::move(edges));
    if (validate(g, {.connected = true, .no_degree_one = true}).ok()) return g;
  }
  throw MisuseError("random_multigraph: no valid graph found for this shape");
}

VoltageAssignment random_voltages(Rng& rng, const FiniteAbelianGroup& group, std::size_t edges) {
  VoltageAssignment v{group, {}};
  v.voltages.reserve(edges);
  for (std::size_t e = 0; e < edges; ++e) v.voltages.push_back(group.element(uniform(rng, group.order())));
  return v;
}

Rng instance_rng(std::uint64_t seed, std::uint64_t id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(id), static_cast<std::uint32_t>(id >> 32)};
  return Rng(seq);
}

}  // namespace ihara
