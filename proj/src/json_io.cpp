#include "ihara/json_io.hpp"

#include <fstream>

#include "ihara/errors.hpp"

namespace ihara {

Json to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw ParseError("not a decimal integer: " + j.dump());
    return v;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntPoly& p) { return to_json(p.coeffs()); }

Json to_json(const CyclotomicInteger& z) {
  return Json{{"m", z.conductor()}, {"coeffs", to_json(z.coeffs())}};
}

Json to_json(const CycPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const Residues& r) {
  Json out = Json::array();
  for (auto x : r) out.push_back(x);
  return out;
}

Json to_json(const GroupRingElement& x) {
  Json out = Json::array();
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    if (x.coeff(i) == 0) continue;
    out.push_back(Json{{"element", to_json(x.group().element(i).residues)},
                       {"coeff", to_json(x.coeff(i))}});
  }
  return out;
}

Json graph_to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.tail, e.head}));
  return Json{{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

namespace {

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Multigraph graph_from_json(const Json& j) {
  const std::int64_t n = as_int(field(j, "vertices"), "\"vertices\"");
  const Json& edges = field(j, "edges");
  if (n < 1) throw ParseError("\"vertices\" must be positive");
  if (!edges.is_array()) throw ParseError("\"edges\" must be an array");
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a [tail, head] pair");
    const std::int64_t t = as_int(e[0], "edge endpoint");
    const std::int64_t h = as_int(e[1], "edge endpoint");
    if (t < 0 || h < 0 || t >= n || h >= n) throw ParseError("edge endpoint out of range: " + e.dump());
    out.push_back({static_cast<VertexId>(t), static_cast<VertexId>(h)});
  }
  return Multigraph(static_cast<std::size_t>(n), std::move(out));
}

Json voltage_to_json(const VoltageAssignment& v) {
  Json voltages = Json::array();
  for (const auto& g : v.voltages) voltages.push_back(to_json(g.residues));
  return Json{{"group", to_json(Residues(v.group.cyclic_orders()))}, {"voltages", std::move(voltages)}};
}

VoltageAssignment voltage_from_json(const Json& j) {
  const Json& group = field(j, "group");
  const Json& voltages = field(j, "voltages");
  if (!group.is_array()) throw ParseError("\"group\" must be an array of cyclic orders");
  if (!voltages.is_array()) throw ParseError("\"voltages\" must be an array");
  std::vector<std::int64_t> orders;
  for (const auto& n : group) {
    const std::int64_t v = as_int(n, "cyclic order");
    if (v < 1) throw ParseError("cyclic orders must be >= 1");
    orders.push_back(v);
  }
  VoltageAssignment out{FiniteAbelianGroup(orders), {}};
  for (const auto& t : voltages) {
    if (!t.is_array() || t.size() != orders.size())
      throw ParseError("each voltage must be a tuple of length " + std::to_string(orders.size()));
    Residues r;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const std::int64_t s = as_int(t[i], "voltage residue");
      r.push_back(((s % orders[i]) + orders[i]) % orders[i]);
    }
    out.voltages.push_back({std::move(r)});
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Multigraph read_graph_file(const std::string& path) { return graph_from_json(read_json_file(path)); }

VoltageAssignment read_voltage_file(const std::string& path) {
  return voltage_from_json(read_json_file(path));
}

}  // namespace ihara
