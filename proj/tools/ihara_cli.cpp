// Command-line front end: kappa, jacobian, zeta, cover, lfunctions, theta,
// verify, sweep. JSON on stdout by default, --text for a human-readable form.
//
// Exit codes: 0 ok, 1 theorem check failed, 2 parse error, 3 validation
// failure, 4 disconnected cover, 5 misuse.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "ihara/errors.hpp"
#include "ihara/json_io.hpp"
#include "ihara/lfunctions.hpp"
#include "ihara/sweep.hpp"
#include "ihara/verifier.hpp"

namespace {

using namespace ihara;

enum ExitCode : int {
  kOk = 0,
  kTheoremFail = 1,
  kParse = 2,
  kValidation = 3,
  kDisconnected = 4,
  kMisuse = 5,
};

struct Output {
  bool text = false;
  std::string path;

  void emit(const Json& json, const std::string& plain) const {
    const std::string body = text ? plain : json.dump(2) + "\n";
    if (path.empty()) {
      std::cout << body;
      return;
    }
    std::ofstream out(path);
    if (!out) throw MisuseError("cannot write " + path);
    out << body;
  }
};

std::string join(const IntVector& v, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string tuple_text(const Residues& r) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
  return os.str() + ")";
}

std::string cyclotomic_text(const CyclotomicInteger& z) {
  if (z.is_rational()) return z.to_integer().get_str();
  std::ostringstream os;
  os << "[" << join(z.coeffs(), ",") << "]_" << z.conductor();
  return os.str();
}

// σ-notation for group elements: "1" for the identity, σ^k in a cyclic
// group, σ1^a·σ2^b otherwise.
std::string element_text(const FiniteAbelianGroup& g, const Residues& r) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    if (any) os << "·";
    any = true;
    os << "σ";
    if (g.rank() > 1) os << (i + 1);
    if (r[i] != 1) os << "^" << r[i];
  }
  return any ? os.str() : "1";
}

DerivedCover load_cover(const std::string& graph_file, const std::string& voltage_file) {
  Multigraph base = read_graph_file(graph_file);
  require(base, {.connected = true});
  return derive(base, read_voltage_file(voltage_file));
}

int cmd_kappa(const std::string& file, const Output& out) {
  const Integer k = kappa(read_graph_file(file));
  out.emit(Json{{"kappa", to_json(k)}}, k.get_str() + "\n");
  return kOk;
}

int cmd_jacobian(const std::string& file, const Output& out) {
  const JacobianStructure jac = jacobian(read_graph_file(file));
  out.emit(Json{{"invariant_factors", to_json(jac.invariant_factors)}, {"order", to_json(jac.order)}},
           "invariant factors: " + join(jac.invariant_factors) + "\norder: " + jac.order.get_str() + "\n");
  return kOk;
}

int cmd_zeta(const std::string& file, const Output& out) {
  const ZetaData z = zeta_reciprocal(read_graph_file(file));
  out.emit(Json{{"reciprocal", to_json(z.reciprocal)},
                {"betti", z.betti},
                {"ord", z.order},
                {"lead", to_json(z.lead)}},
           "reciprocal: " + join(z.reciprocal.coeffs()) + "\nord: " + std::to_string(z.order) +
               "\nlead: " + z.lead.get_str() + "\n");
  return kOk;
}

int cmd_cover(const std::string& graph, const std::string& voltages, const Output& out) {
  const DerivedCover c = load_cover(graph, voltages);
  Json j = graph_to_json(c.total());
  j["connected"] = is_connected_cover(c);
  std::ostringstream os;
  os << "vertices: " << c.total().vertex_count() << "\nedges:";
  for (const auto& e : c.total().edges()) os << " " << e.tail << "-" << e.head;
  os << "\nconnected: " << (is_connected_cover(c) ? "true" : "false") << "\n";
  out.emit(j, os.str());
  return kOk;
}

int cmd_lfunctions(const std::string& graph, const std::string& voltages, const Output& out) {
  const DerivedCover c = load_cover(graph, voltages);
  const auto ls = all_l_functions(c);
  Json rows = Json::array();
  std::ostringstream os;
  for (const auto& l : ls) {
    rows.push_back(Json{{"character", to_json(l.character.exponents)},
                        {"reciprocal", to_json(l.reciprocal)},
                        {"ord", l.order},
                        {"lead", to_json(l.lead)}});
    os << tuple_text(l.character.exponents) << ": reciprocal";
    for (const auto& coeff : l.reciprocal.coeffs()) os << " " << cyclotomic_text(coeff);
    os << "; ord " << l.order << "; lead " << cyclotomic_text(l.lead) << "\n";
  }
  out.emit(Json{{"group", to_json(Residues(c.group().cyclic_orders()))},
                {"conductor", c.group().exponent()},
                {"characters", rows}},
           os.str());
  return kOk;
}

int cmd_theta(const std::string& graph, const std::string& voltages, const Output& out) {
  const DerivedCover c = load_cover(graph, voltages);
  const ThetaElement theta = theta_element(c);
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < theta.value.coeffs().size(); ++i) {
    if (theta.value.coeff(i) == 0) continue;
    os << (any ? ", " : "") << element_text(c.group(), c.group().element(i).residues) << ":"
       << theta.value.coeff(i);
    any = true;
  }
  if (!any) os << "0";
  os << "\n";
  out.emit(Json{{"group", to_json(Residues(c.group().cyclic_orders()))}, {"theta", to_json(theta.value)}},
           os.str());
  return kOk;
}

// An empty selection means every check; Kuroda is then reported as skipped
// instead of failing when the group is not elementary 2-abelian.
int cmd_verify(const std::string& graph, const std::string& voltages, std::set<Check> checks,
               bool timings, const Output& out) {
  const DerivedCover c = load_cover(graph, voltages);
  const bool explicit_kuroda = checks.count(Check::Kuroda) > 0;
  if (checks.empty()) {
    const auto all = all_checks();
    checks.insert(all.begin(), all.end());
  }
  const VerificationReport report = verify(c, checks, explicit_kuroda);
  const Json j = report.to_json(timings);
  std::ostringstream os;
  for (const auto& [check, outcome] : report.results)
    os << check_name(check) << ": " << status_name(outcome.status) << "\n";
  out.emit(j, os.str());
  return report.all_passed() ? kOk : kTheoremFail;
}

std::vector<std::int64_t> parse_group(const std::string& spec) {
  std::vector<std::int64_t> orders;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      orders.push_back(v);
    } catch (const std::exception&) {
      throw MisuseError("bad group specification: " + spec);
    }
  }
  return orders;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("IHARA_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ihara zeta functions, Artin-Ihara L-functions and abelian covers of multigraphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_flag("--text", out.text, "human-readable output instead of JSON");
  app.add_option("-o,--output", out.path, "write output to this file");

  std::string graph, voltages;
  auto* kappa_cmd = app.add_subcommand("kappa", "spanning-tree count");
  kappa_cmd->add_option("graph", graph, "graph JSON file")->required();
  auto* jac_cmd = app.add_subcommand("jacobian", "invariant factors of Jac(X)");
  jac_cmd->add_option("graph", graph, "graph JSON file")->required();
  auto* zeta_cmd = app.add_subcommand("zeta", "reciprocal of the Ihara zeta function");
  zeta_cmd->add_option("graph", graph, "graph JSON file")->required();

  auto add_cover_args = [&](CLI::App* cmd) {
    cmd->add_option("graph", graph, "base graph JSON file")->required();
    cmd->add_option("voltages", voltages, "voltage JSON file")->required();
  };
  auto* cover_cmd = app.add_subcommand("cover", "derived cover graph");
  add_cover_args(cover_cmd);
  auto* l_cmd = app.add_subcommand("lfunctions", "Artin-Ihara L-functions of every character");
  add_cover_args(l_cmd);
  auto* theta_cmd = app.add_subcommand("theta", "equivariant special value in Z[G]");
  add_cover_args(theta_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "verify the special-value theorems on a cover");
  add_cover_args(verify_cmd);
  bool all = false, timings = false;
  std::map<Check, bool> selected;
  verify_cmd->add_flag("--all", all, "run every check (default)");
  for (Check c : all_checks())
    verify_cmd->add_flag(std::string("--") + check_name(c), selected[c], std::string("run the ") + check_name(c) + " check");
  verify_cmd->add_flag("--timings", timings, "include per-check wall time");

  SweepConfig sweep;
  std::string group_spec = "2";
  bool no_loops = false;
  std::optional<unsigned> jobs;
  auto* sweep_cmd = app.add_subcommand("sweep", "random cover generation and batch verification");
  sweep_cmd->add_option("--vertices", sweep.vertices, "base vertex count")->capture_default_str();
  sweep_cmd->add_option("--edges", sweep.edges, "base edge count")->capture_default_str();
  sweep_cmd->add_option("--group", group_spec, "cyclic orders, e.g. 2,2")->capture_default_str();
  sweep_cmd->add_option("--count", sweep.count, "number of instances")->capture_default_str();
  sweep_cmd->add_option("--seed", sweep.seed, "64-bit seed")->capture_default_str();
  sweep_cmd->add_option("--jobs", jobs, "worker threads (default: $IHARA_JOBS or 1)");
  sweep_cmd->add_flag("--no-loops", no_loops, "never generate loops");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMisuse;
  }

  try {
    if (*kappa_cmd) return cmd_kappa(graph, out);
    if (*jac_cmd) return cmd_jacobian(graph, out);
    if (*zeta_cmd) return cmd_zeta(graph, out);
    if (*cover_cmd) return cmd_cover(graph, voltages, out);
    if (*l_cmd) return cmd_lfunctions(graph, voltages, out);
    if (*theta_cmd) return cmd_theta(graph, voltages, out);
    if (*verify_cmd) {
      std::set<Check> checks;
      if (!all)
        for (const auto& [c, on] : selected)
          if (on) checks.insert(c);
      return cmd_verify(graph, voltages, checks, timings, out);
    }
    if (*sweep_cmd) {
      sweep.group = parse_group(group_spec);
      sweep.loops = !no_loops;
      sweep.jobs = jobs.value_or(default_jobs());
      const SweepResult result = run_sweep(sweep);
      std::ostringstream os;
      os << "attempted: " << result.report["attempted"] << "\nverified: " << result.report["verified"]
         << "\ndisconnected: " << result.report["disconnected_skipped"]
         << "\nfailed: " << result.report["failed"] << "\n";
      out.emit(result.report, os.str());
      return result.all_passed ? kOk : kTheoremFail;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ValidationError& e) {
    std::cerr << "validation failed: " << e.what() << "\n";
    return kValidation;
  } catch (const DimensionError& e) {
    std::cerr << "validation failed: " << e.what() << "\n";
    return kValidation;
  } catch (const DisconnectedCoverError& e) {
    std::cerr << "disconnected cover: " << e.what() << "\n";
    return kDisconnected;
  } catch (const MisuseError& e) {
    std::cerr << "misuse: " << e.what() << "\n";
    return kMisuse;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kTheoremFail;
  }
  return kMisuse;
}
