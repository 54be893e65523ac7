#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ihara/json_io.hpp"

namespace ihara {

struct SweepConfig {
  std::size_t vertices = 4;
  std::size_t edges = 6;
  std::vector<std::int64_t> group{2};
  std::size_t count = 10;
  std::uint64_t seed = 0;
  bool loops = true;
  unsigned jobs = 1;
};

struct SweepResult {
  Json report;
  bool all_passed = true;
};

/// Generates `count` random covers and verifies every theorem on each
/// connected one. Instance i draws from instance_rng(seed, i), so the report
/// does not depend on `jobs`. Throws MisuseError when the bounds
/// (|V| <= 8, |E| <= 16, |G| <= 16) are exceeded.
SweepResult run_sweep(const SweepConfig& config);

}  // namespace ihara
