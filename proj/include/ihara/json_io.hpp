#pragma once

#include <json.hpp>
#include <string>

#include "ihara/cover.hpp"
#include "ihara/cyclotomic.hpp"
#include "ihara/group_ring.hpp"
#include "ihara/int_poly.hpp"
#include "ihara/multigraph.hpp"

namespace ihara {

using Json = nlohmann::ordered_json;

// Integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.
Json to_json(const Integer& v);
Integer integer_from_json(const Json& j);

Json to_json(const IntVector& v);
Json to_json(const IntPoly& p);
// {"m": conductor, "coeffs": [...]}
Json to_json(const CyclotomicInteger& z);
Json to_json(const CycPoly& p);
Json to_json(const Residues& r);
// [{"element": [...], "coeff": c}, ...] over the nonzero coefficients.
Json to_json(const GroupRingElement& x);

// {"vertices": n, "edges": [[tail, head], ...]}
Json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const Json& j);

// {"group": [n_1, ..., n_k], "voltages": [[s_1, ..., s_k], ...]}
Json voltage_to_json(const VoltageAssignment& v);
VoltageAssignment voltage_from_json(const Json& j);

// Whole-file readers. Throw ParseError on unreadable or malformed input.
Json read_json_file(const std::string& path);
Multigraph read_graph_file(const std::string& path);
VoltageAssignment read_voltage_file(const std::string& path);

}  // namespace ihara
