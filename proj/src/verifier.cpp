#include "ihara/verifier.hpp"

#include <chrono>

#include "ihara/errors.hpp"

namespace ihara {

namespace {

template <class F>
Outcome timed(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out = body();
  out.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

Integer power_of_two(unsigned long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  return p;
}

Outcome fail(Json witness, Json detail = Json::object()) {
  Outcome o;
  o.status = Status::Fail;
  o.witness = std::move(witness);
  o.detail = std::move(detail);
  return o;
}

}  // namespace

const char* check_name(Check c) {
  switch (c) {
    case Check::Annihilation: return "annihilation";
    case Check::Index: return "index";
    case Check::Kuroda: return "kuroda";
    case Check::Product: return "product";
    case Check::Divisibility: return "divisibility";
    case Check::Jac0: return "jac0";
  }
  return "?";
}

std::optional<Check> check_from_name(const std::string& name) {
  for (Check c : all_checks())
    if (name == check_name(c)) return c;
  return std::nullopt;
}

std::vector<Check> all_checks() {
  return {Check::Annihilation, Check::Index,        Check::Kuroda,
          Check::Product,      Check::Divisibility, Check::Jac0};
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

Outcome verify_annihilation(const DerivedCover& c) {
  return verify_annihilation(c, theta_element(c));
}

Outcome verify_annihilation(const DerivedCover& c, const ThetaElement& theta) {
  require_connected_cover(c, "verify_annihilation");
  const Multigraph& y = c.total();
  const IntegerLattice principal(matrices(y).laplacian);
  const auto& g = c.group();
  for (VertexId w = 0; w < y.vertex_count(); ++w) {
    IntVector divisor(y.vertex_count());
    for (std::size_t s = 0; s < g.order(); ++s) divisor[c.act(s, w)] += theta.value.coeff(s);
    if (!principal.contains(divisor))
      return fail(Json{{"vertex", w}, {"divisor", to_json(divisor)}});
  }
  Outcome o;
  o.detail = Json{{"vertices_checked", y.vertex_count()}};
  return o;
}

Outcome verify_index(const DerivedCover& c) {
  const auto l = all_l_functions(c);
  return verify_index(c, theta_element(c, l), l);
}

Outcome verify_index(const DerivedCover& c, const ThetaElement& theta,
                     std::span<const LData> l_functions) {
  require_connected_cover(c, "verify_index");
  const auto& g = c.group();
  const std::size_t d = g.order();
  const long r = betti(c.base());
  const Integer kx = kappa(c.base());
  const Integer ky = kappa(c.total());
  const Integer scale = power_of_two(static_cast<unsigned long>((d - 1) * static_cast<std::size_t>(r - 1)));

  Integer index = 1;
  if (d > 1) {
    // Row s-1 holds the coordinate on σ_s - 1; x ∈ I_G is Σ_{σ≠1} x_σ(σ - 1).
    IntMatrix gens(d - 1, d);
    for (std::size_t t = 0; t < d; ++t) {
      const GroupRingElement product = theta.value * GroupRingElement::basis(g, t);
      if (product.augmentation() != 0)
        return fail(Json{{"generator", to_json(g.element(t).residues)},
                         {"augmentation", to_json(product.augmentation())}});
      for (std::size_t s = 1; s < d; ++s) gens(s - 1, t) = product.coeff(s);
    }
    const IntegerLattice lattice(gens);
    if (lattice.rank() != d - 1)
      return fail(Json{{"rank", lattice.rank()}, {"expected_rank", d - 1}});
    index = lattice.torsion_order();
  }

  // Second route: |det_Z(θ on I_G)| / d = |Π_{χ≠1} L*(1, χ)| / d.
  CyclotomicInteger l_product(g.exponent(), 1);
  for (const auto& l : l_functions)
    if (!is_trivial(l.character)) l_product = l_product * l.lead;
  Json detail{{"index", to_json(index)}, {"kappa_x", to_json(kx)}, {"kappa_y", to_json(ky)}};
  if (l_product.is_rational()) {
    Integer via_l = abs(l_product.to_integer());
    const bool divisible = mpz_divisible_ui_p(via_l.get_mpz_t(), d);
    if (divisible) via_l /= static_cast<unsigned long>(d);
    detail["l_value_route"] = to_json(via_l);
    detail["routes_agree"] = divisible && via_l == index;
  } else {
    detail["l_value_route"] = to_json(l_product);
    detail["routes_agree"] = false;
  }

  // index = 2^{(d-1)(r-1)}·κ_Y/κ_X, compared without division.
  if (index * kx != scale * ky) {
    return fail(Json{{"index", to_json(index)},
                     {"expected_times_kappa_x", to_json(scale * ky)},
                     {"kappa_x", to_json(kx)}},
                detail);
  }
  Outcome o;
  o.detail = std::move(detail);
  return o;
}

Outcome verify_kuroda(const DerivedCover& c) {
  const auto& g = c.group();
  if (!g.is_elementary_2group() || g.rank() < 2)
    throw MisuseError("the Kuroda relation needs G = (Z/2)^m with m >= 2");
  require_connected_cover(c, "verify_kuroda");
  const std::size_t m = g.rank();
  const Integer kx = kappa(c.base());
  const Integer ky = kappa(c.total());

  Json intermediates = Json::array();
  Integer product = 1;
  for (std::size_t k = 1; k < g.order(); ++k) {
    const Character chi = g.character(k);
    const DerivedCover xi = quotient(c, character_kernel(g, chi));
    if (!is_connected_cover(xi))
      throw DisconnectedCoverError("verify_kuroda: intermediate cover for character " +
                                   to_json(chi.exponents).dump() + " is disconnected");
    const Integer ki = kappa(xi.total());
    product *= ki;
    intermediates.push_back(Json{{"character", to_json(chi.exponents)}, {"kappa", to_json(ki)}});
  }
  const std::size_t two_m = std::size_t{1} << m;
  Integer kx_power;
  mpz_pow_ui(kx_power.get_mpz_t(), kx.get_mpz_t(), two_m - 2);
  const Integer lhs = ky * kx_power;
  const Integer rhs = power_of_two(two_m - m - 1) * product;
  Json detail{{"kappa_x", to_json(kx)}, {"kappa_y", to_json(ky)}, {"intermediates", intermediates}};
  if (lhs != rhs) return fail(Json{{"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}}, detail);
  Outcome o;
  o.detail = std::move(detail);
  return o;
}

Outcome verify_product(const DerivedCover& c, std::span<const LData> l_functions) {
  if (product_check(c, l_functions)) return {};
  return fail(Json{{"zeta_y", to_json(zeta_reciprocal(c.total()).reciprocal)},
                   {"zeta_x", to_json(zeta_reciprocal(c.base()).reciprocal)}});
}

Outcome verify_divisibility(const DerivedCover& c) {
  require_connected_cover(c, "verify_divisibility");
  const Integer kx = kappa(c.base());
  const Integer ky = kappa(c.total());
  Json detail{{"kappa_x", to_json(kx)}, {"kappa_y", to_json(ky)}};
  if (!mpz_divisible_p(ky.get_mpz_t(), kx.get_mpz_t()))
    return fail(Json{{"kappa_x", to_json(kx)}, {"kappa_y", to_json(ky)}}, detail);
  Outcome o;
  o.detail = std::move(detail);
  return o;
}

Integer jac0_order(const DerivedCover& c) {
  require_connected_cover(c, "jac0_order");
  const Multigraph& y = c.total();
  const std::size_t v = y.vertex_count();
  if (v == 1) return 1;
  // Coordinates on Div⁰(Y): x ↦ (x_1, ..., x_{v-1}), basis e_i - e_0.
  // Jac(Y) = Z^{v-1}/Pr and N_G is an endomorphism of this finite group, so
  // |ker N_G| = |coker N_G| = [Z^{v-1} : Pr + N_G·Div⁰].
  const IntMatrix q = matrices(y).laplacian;
  IntMatrix gens(v - 1, v + (v - 1));
  for (std::size_t col = 0; col < v; ++col)
    for (std::size_t row = 1; row < v; ++row) gens(row - 1, col) = q(row, col);
  for (std::size_t i = 1; i < v; ++i) {
    IntVector basis(v);
    basis[i] = 1;
    basis[0] = -1;
    const IntVector image = cor(c, res(c, basis));  // N_G·(e_i - e_0)
    for (std::size_t row = 1; row < v; ++row) gens(row - 1, v + i - 1) = image[row];
  }
  const IntegerLattice lattice(gens);
  if (lattice.rank() != v - 1) throw ConsistencyError("jac0_order: Pr(Y) is not of full rank");
  return lattice.torsion_order();
}

Outcome verify_jac0(const DerivedCover& c) {
  const Integer order = jac0_order(c);
  const Integer kx = kappa(c.base());
  const Integer ky = kappa(c.total());
  Json detail{{"jac0_order", to_json(order)}, {"kappa_x", to_json(kx)}, {"kappa_y", to_json(ky)}};
  if (order * kx != ky) {
    return fail(Json{{"jac0_order", to_json(order)}, {"kappa_x", to_json(kx)}, {"kappa_y", to_json(ky)}},
                detail);
  }
  Outcome o;
  o.detail = std::move(detail);
  return o;
}

bool VerificationReport::all_passed() const {
  for (const auto& [check, outcome] : results)
    if (outcome.status == Status::Fail) return false;
  return true;
}

Json VerificationReport::to_json(bool timings) const {
  Json statuses = Json::object();
  Json details = Json::object();
  Json witness = Json::object();
  Json times = Json::object();
  for (const auto& [check, outcome] : results) {
    statuses[check_name(check)] = status_name(outcome.status);
    details[check_name(check)] = outcome.detail;
    if (!outcome.witness.is_null()) witness[check_name(check)] = outcome.witness;
    times[check_name(check)] = outcome.millis;
  }
  Json out{{"cover", cover}, {"results", statuses}, {"details", details}, {"witness", witness}};
  if (timings) out["timings_ms"] = times;
  return out;
}

VerificationReport verify(const DerivedCover& c, const std::set<Check>& checks,
                          bool explicit_kuroda) {
  require_connected_cover(c, "verify");
  VerificationReport report;
  report.cover = Json{{"graph", graph_to_json(c.base())}, {"voltages", voltage_to_json(c.voltage())}};

  std::vector<LData> l_functions;
  std::optional<ThetaElement> theta;
  const bool needs_l = checks.count(Check::Annihilation) || checks.count(Check::Index) ||
                       checks.count(Check::Product);
  if (needs_l) l_functions = all_l_functions(c);
  if (checks.count(Check::Annihilation) || checks.count(Check::Index))
    theta = theta_element(c, l_functions);

  for (Check check : all_checks()) {
    if (!checks.count(check)) continue;
    Outcome outcome;
    switch (check) {
      case Check::Annihilation:
        outcome = timed([&] { return verify_annihilation(c, *theta); });
        break;
      case Check::Index:
        outcome = timed([&] { return verify_index(c, *theta, l_functions); });
        break;
      case Check::Kuroda:
        try {
          outcome = timed([&] { return verify_kuroda(c); });
        } catch (const MisuseError& e) {
          if (explicit_kuroda) throw;
          outcome.status = Status::Skipped;
          outcome.detail = Json{{"reason", e.what()}};
        } catch (const DisconnectedCoverError& e) {
          if (explicit_kuroda) throw;
          outcome.status = Status::Skipped;
          outcome.detail = Json{{"reason", e.what()}};
        }
        break;
      case Check::Product:
        outcome = timed([&] { return verify_product(c, l_functions); });
        break;
      case Check::Divisibility:
        outcome = timed([&] { return verify_divisibility(c); });
        break;
      case Check::Jac0:
        outcome = timed([&] { return verify_jac0(c); });
        break;
    }
    report.results.emplace_back(check, std::move(outcome));
  }
  return report;
}

}  // namespace ihara
