#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ihara/int_matrix.hpp"
#include "ihara/integer.hpp"

namespace ihara {

using VertexId = std::size_t;

/// An edge with its reference orientation tail → head. tail == head is a loop.
struct Edge {
  VertexId tail;
  VertexId head;

  bool is_loop() const { return tail == head; }
  bool operator==(const Edge&) const = default;
};

/// Finite multigraph on vertices 0..n-1. Loops and parallel edges are
/// allowed; an edge's identity is its position in the edge list.
class Multigraph {
 public:
  // Throws DimensionError when vertex_count == 0 or an endpoint is out of range.
  Multigraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  // Valency, each loop counted twice.
  std::size_t valency(VertexId v) const;
  bool is_connected() const;

  bool operator==(const Multigraph&) const = default;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

enum class Requirement { Connected, NoDegreeOne };

struct Violation {
  Requirement requirement;
  std::optional<VertexId> vertex;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

struct ValidationFlags {
  bool connected = false;
  bool no_degree_one = false;
};

/// Checks the requested standing assumptions. "No degree one" is enforced
/// as minimum valency >= 2, so isolated vertices are violations too.
ValidationReport validate(const Multigraph& g, ValidationFlags flags);

/// validate() that throws ValidationError carrying the summary.
void require(const Multigraph& g, ValidationFlags flags);

struct GraphMatrices {
  IntMatrix adjacency;  // loops contribute 2 on the diagonal
  IntMatrix degree;     // diagonal valencies
  IntMatrix laplacian;  // degree - adjacency
};

GraphMatrices matrices(const Multigraph& g);

/// First Betti number |E| - |V| + 1. Requires a connected graph.
long betti(const Multigraph& g);

/// Spanning-tree count via Kirchhoff: determinant of the Laplacian with the
/// first row and column deleted. Requires a connected graph.
Integer kappa(const Multigraph& g);

/// Spanning-tree count by enumerating (n-1)-subsets of non-loop edges.
/// Requires a connected graph with at most 20 edges.
Integer kappa_bruteforce(const Multigraph& g);

/// Jac(X) = Div⁰(X)/Pr(X) presented by the Laplacian.
struct JacobianStructure {
  IntVector invariant_factors;  // d_1 | ... | d_{n-1}, units included
  Integer order;
};

JacobianStructure jacobian(const Multigraph& g);

// Standard families used in tests, examples and the CLI.
namespace graphs {
Multigraph cycle(std::size_t n);
Multigraph complete(std::size_t n);
// Two vertices joined by `k` parallel edges (k = 3 is the theta graph).
Multigraph theta(std::size_t k = 3);
Multigraph bouquet(std::size_t loops);
}  // namespace graphs

}  // namespace ihara
