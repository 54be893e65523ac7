#pragma once

#include <cstddef>
#include <random>

#include "ihara/cover.hpp"
#include "ihara/multigraph.hpp"

namespace ihara {

using Rng = std::mt19937_64;

struct GraphShape {
  std::size_t vertices;
  std::size_t edges;
  bool loops = true;
};

/// Random connected multigraph with minimum valency 2: a random spanning
/// tree first, then the remaining edges between uniform endpoints,
/// rejecting draws that leave a vertex of valency < 2. Throws MisuseError
/// when the shape cannot satisfy the constraints.
Multigraph random_multigraph(Rng& rng, GraphShape shape);

/// Uniform voltages, one per edge.
VoltageAssignment random_voltages(Rng& rng, const FiniteAbelianGroup& group, std::size_t edges);

/// Independent stream for instance `id` of a run seeded with `seed`.
Rng instance_rng(std::uint64_t seed, std::uint64_t id);

}  // namespace ihara
