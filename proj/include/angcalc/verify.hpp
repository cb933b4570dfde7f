#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "angcalc/core.hpp"
#include "angcalc/wide.hpp"

namespace angcalc {

/// Outcome of a batch of independent oracle runs. `failing` lists a label
/// per failed case, in case order, so serial and parallel runs compare equal.
struct SweepStats {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> failing;

  friend bool operator==(const SweepStats&, const SweepStats&) = default;
};

/// For every f_j (j in [1, period]): ar_angle passes the Hom-exactness oracle,
/// its xi^d is right and xi^0 left almost split in F-bar, xi^0..xi^d are
/// radical, and the connecting map is nonzero.
SweepStats sweep_ar_closure(const FamilyParams& p);

/// For every spec and member f_j: ar_angle_in passes is_ar_angle and the
/// exactness oracle, its connecting map is nonzero and its head is the cover
/// of the ambient head; for every f_j, cover passes is_cover (and is the
/// identity on members).
SweepStats sweep_subcategory(const FamilyParams& p, const std::vector<SubcatSpec>& specs);

/// theorem_b_check passes with both sides true for every spec and member.
SweepStats sweep_theorem_b(const FamilyParams& p, const std::vector<SubcatSpec>& specs);

namespace serial {
SweepStats sweep_ar_closure(const FamilyParams& p);
SweepStats sweep_subcategory(const FamilyParams& p, const std::vector<SubcatSpec>& specs);
SweepStats sweep_theorem_b(const FamilyParams& p, const std::vector<SubcatSpec>& specs);
}  // namespace serial

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string target;
  std::vector<CheckResult> checks;

  bool pass() const;
};

/// Targets: core, angles, ar, wide, theorem-b, all. Throws ParseError on an
/// unknown target.
SuiteReport run_suite(const FamilyParams& p, std::string_view target);

}  // namespace angcalc
