#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ihara/cover.hpp"
#include "ihara/json_io.hpp"
#include "ihara/lfunctions.hpp"

namespace ihara {

enum class Check { Annihilation, Index, Kuroda, Product, Divisibility, Jac0 };

const char* check_name(Check c);
std::optional<Check> check_from_name(const std::string& name);
std::vector<Check> all_checks();

enum class Status { Pass, Fail, Skipped };

const char* status_name(Status s);

/// Result of one theorem check. A failure always carries a witness.
struct Outcome {
  Status status = Status::Pass;
  Json detail = Json::object();
  Json witness = nullptr;
  double millis = 0.0;

  bool passed() const { return status == Status::Pass; }
};

/// θ·w ∈ Pr(Y) for every vertex w of Y (the Pic-level statement).
Outcome verify_annihilation(const DerivedCover& c, const ThetaElement& theta);
Outcome verify_annihilation(const DerivedCover& c);

/// [I_G : θ·Z[G]] = 2^{(d-1)(r_X-1)}·κ_Y/κ_X, the left side by Smith form
/// of the generators θ·σ in the basis {σ - 1 : σ ≠ 1}. The detail also
/// records the same index through |Π_{χ≠1} L*(1, χ)|/d.
Outcome verify_index(const DerivedCover& c, const ThetaElement& theta,
                     std::span<const LData> l_functions);
Outcome verify_index(const DerivedCover& c);

/// κ_Y·κ_X^{2^m-2} = 2^{2^m-m-1}·Π κ_i over the 2^m - 1 intermediate double
/// covers. Throws MisuseError unless G ≅ (Z/2)^m with m >= 2, and
/// DisconnectedCoverError when Y or an intermediate cover is disconnected.
Outcome verify_kuroda(const DerivedCover& c);

Outcome verify_product(const DerivedCover& c, std::span<const LData> l_functions);

/// κ_X | κ_Y.
Outcome verify_divisibility(const DerivedCover& c);

/// Order of Jac⁰(Y) = {[D] ∈ Jac(Y) : N_G·[D] = 0}, computed from the
/// lattice presentation of Jac(Y), not from tree counts.
Integer jac0_order(const DerivedCover& c);
/// jac0_order(c) = κ_Y/κ_X.
Outcome verify_jac0(const DerivedCover& c);

struct VerificationReport {
  Json cover;
  std::vector<std::pair<Check, Outcome>> results;

  bool all_passed() const;
  // {"cover": ..., "results": {name: status}, "details": ..., "witness": ...};
  // per-check wall time is included only when `timings` is set, so reports
  // stay reproducible by default.
  Json to_json(bool timings = false) const;
};

/// Runs the selected checks, sharing the L-functions and θ between them.
/// When `explicit_kuroda` is false, a Kuroda check that does not apply
/// (wrong group, disconnected intermediate) is recorded as skipped instead
/// of raising.
VerificationReport verify(const DerivedCover& c, const std::set<Check>& checks,
                          bool explicit_kuroda);

}  // namespace ihara
