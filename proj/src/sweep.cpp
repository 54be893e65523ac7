#include "ihara/sweep.hpp"

#include <atomic>
#include <thread>

#include "ihara/errors.hpp"
#include "ihara/generate.hpp"
#include "ihara/verifier.hpp"

namespace ihara {

namespace {

struct InstanceResult {
  Json summary;
  bool failed = false;
  bool disconnected = false;
  bool kuroda_checked = false;
  bool kuroda_skipped = false;
};

InstanceResult run_instance(const SweepConfig& config, const FiniteAbelianGroup& group,
                            std::size_t id) {
  InstanceResult out;
  Rng rng = instance_rng(config.seed, id);
  const Multigraph base = random_multigraph(rng, {config.vertices, config.edges, config.loops});
  const DerivedCover cover = derive(base, random_voltages(rng, group, base.edge_count()));
  out.summary = Json{{"id", id}};
  if (!is_connected_cover(cover)) {
    out.disconnected = true;
    out.summary["status"] = "disconnected";
    return out;
  }
  try {
    const std::vector<Check> checks = all_checks();
    const VerificationReport report = verify(cover, {checks.begin(), checks.end()}, false);
    out.failed = !report.all_passed();
    Json full = report.to_json();
    out.summary["status"] = out.failed ? "failed" : "verified";
    out.summary["results"] = full["results"];
    if (out.failed) {
      out.summary["cover"] = full["cover"];
      out.summary["witness"] = full["witness"];
    }
    for (const auto& [check, outcome] : report.results) {
      if (check != Check::Kuroda) continue;
      out.kuroda_checked = outcome.status != Status::Skipped;
      out.kuroda_skipped = outcome.status == Status::Skipped;
    }
  } catch (const Error& e) {
    out.failed = true;
    out.summary["status"] = "error";
    out.summary["error"] = e.what();
    out.summary["cover"] =
        Json{{"graph", graph_to_json(base)}, {"voltages", voltage_to_json(cover.voltage())}};
  }
  return out;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config) {
  if (config.vertices > 8 || config.edges > 16)
    throw MisuseError("sweep: bounds are |V| <= 8 and |E| <= 16");
  const FiniteAbelianGroup group(config.group);
  if (group.order() > 16) throw MisuseError("sweep: group order must be <= 16");
  if (config.count > 0) {
    // Surface an impossible shape before spawning workers.
    Rng probe = instance_rng(config.seed, 0);
    random_multigraph(probe, {config.vertices, config.edges, config.loops});
  }

  std::vector<InstanceResult> results(config.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < config.count; i = next++) results[i] = run_instance(config, group, i);
  };
  const unsigned jobs = std::max(1u, config.jobs);
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  SweepResult out;
  std::size_t disconnected = 0, failed = 0, verified = 0, kuroda_checked = 0, kuroda_skipped = 0;
  Json instances = Json::array();
  for (auto& r : results) {
    disconnected += r.disconnected;
    failed += r.failed;
    verified += !r.disconnected && !r.failed;
    kuroda_checked += r.kuroda_checked;
    kuroda_skipped += r.kuroda_skipped;
    instances.push_back(std::move(r.summary));
  }
  out.all_passed = failed == 0;
  out.report = Json{
      {"config",
       {{"vertices", config.vertices},
        {"edges", config.edges},
        {"group", to_json(Residues(config.group))},
        {"count", config.count},
        {"seed", config.seed},
        {"loops", config.loops}}},
      {"attempted", config.count},
      {"disconnected_skipped", disconnected},
      {"verified", verified},
      {"failed", failed},
      {"kuroda", {{"checked", kuroda_checked}, {"skipped", kuroda_skipped}}},
      {"instances", std::move(instances)}};
  return out;
}

}  // namespace ihara
