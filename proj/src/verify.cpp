#include "angcalc/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>

#include "angcalc/angle.hpp"
#include "angcalc/artheory.hpp"

namespace angcalc {

namespace {

using CaseFn = std::function<std::optional<std::string>(std::size_t)>;

SweepStats reduce(std::vector<std::optional<std::string>>& results) {
  SweepStats s;
  s.cases = results.size();
  for (auto& r : results)
    if (r) {
      ++s.failures;
      s.failing.push_back(std::move(*r));
    }
  return s;
}

SweepStats run_parallel(std::size_t n, const CaseFn& fn) {
  std::vector<std::optional<std::string>> results(n);
  const auto total = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < total; ++k) results[static_cast<std::size_t>(k)] = fn(static_cast<std::size_t>(k));
  return reduce(results);
}

SweepStats run_serial(std::size_t n, const CaseFn& fn) {
  std::vector<std::optional<std::string>> results(n);
  for (std::size_t k = 0; k < n; ++k) results[k] = fn(k);
  return reduce(results);
}

std::string label(const char* what, Position pos) { return std::string(what) + "@" + std::to_string(pos); }

std::string label(const char* what, const SubcatSpec& s, Position pos) {
  std::string out = std::string(what) + "{";
  for (std::size_t i = 0; i < s.indices().size(); ++i) out += (i ? "," : "") + std::to_string(s.indices()[i]);
  return out + "}@" + std::to_string(pos);
}

CaseFn ar_closure_case(const FamilyParams& p) {
  return [p](std::size_t k) -> std::optional<std::string> {
    const IndecObject x{static_cast<Position>(k) + 1};
    const auto full = SubcatSpec::full(p);
    const Angle a = ar_angle(p, x);
    const std::size_t d = static_cast<std::size_t>(p.d());
    if (!check_hom_exactness(a).pass) return label("exactness", x.pos);
    if (!is_right_almost_split(full, a.map(d))) return label("right-almost-split", x.pos);
    if (!is_left_almost_split(full, a.map(0))) return label("left-almost-split", x.pos);
    for (std::size_t s = 0; s <= d; ++s)
      if (!is_radical(a.map(s))) return label("radical", x.pos);
    if (a.connecting_map().is_zero()) return label("connecting", x.pos);
    if (hom_dim(p, a.object(d + 1)[0], a.closing_object()[0]) != 1) return label("socle", x.pos);
    return std::nullopt;
  };
}

CaseFn subcategory_case(const FamilyParams& p, const std::vector<SubcatSpec>& specs) {
  return [p, &specs](std::size_t k) -> std::optional<std::string> {
    const auto n = static_cast<std::size_t>(p.period());
    const SubcatSpec& s = specs[k / n];
    const IndecObject x{static_cast<Position>(k % n) + 1};

    const CoverResult c = cover(s, x);
    if (!is_cover(s, c.mor)) return label("cover", s, x.pos);
    if (c.source.size() > 1) return label("cover-indecomposable", s, x.pos);
    if (s.contains(x) && !(c.mor == Morphism::identity(p, SumObject(x)))) return label("cover-identity", s, x.pos);
    if (!s.contains(x)) return std::nullopt;

    const Angle a = ar_angle_in(s, x);
    if (!is_ar_angle(s, a)) return label("ar-angle-in", s, x.pos);
    if (!check_hom_exactness(a).pass) return label("exactness-in", s, x.pos);
    if (a.connecting_map().is_zero()) return label("connecting-in", s, x.pos);
    const IndecObject ambient_head{x.pos - p.m()};
    if (!(a.object(0) == cover(s, ambient_head).source)) return label("head", s, x.pos);
    return std::nullopt;
  };
}

CaseFn theorem_b_case(const FamilyParams& p, const std::vector<SubcatSpec>& specs) {
  return [p, &specs](std::size_t k) -> std::optional<std::string> {
    const auto n = static_cast<std::size_t>(p.period());
    const SubcatSpec& s = specs[k / n];
    const IndecObject x{static_cast<Position>(k % n) + 1};
    if (!s.contains(x)) return std::nullopt;
    const auto r = theorem_b_check(s, x);
    if (!r.pass || !r.cover_side || !r.angle_side) return label("theorem-b", s, x.pos);
    return std::nullopt;
  };
}

std::size_t grid(const FamilyParams& p, const std::vector<SubcatSpec>& specs) {
  return specs.size() * static_cast<std::size_t>(p.period());
}

}  // namespace

SweepStats sweep_ar_closure(const FamilyParams& p) {
  return run_parallel(static_cast<std::size_t>(p.period()), ar_closure_case(p));
}
SweepStats sweep_subcategory(const FamilyParams& p, const std::vector<SubcatSpec>& specs) {
  return run_parallel(grid(p, specs), subcategory_case(p, specs));
}
SweepStats sweep_theorem_b(const FamilyParams& p, const std::vector<SubcatSpec>& specs) {
  return run_parallel(grid(p, specs), theorem_b_case(p, specs));
}

namespace serial {
SweepStats sweep_ar_closure(const FamilyParams& p) {
  return run_serial(static_cast<std::size_t>(p.period()), ar_closure_case(p));
}
SweepStats sweep_subcategory(const FamilyParams& p, const std::vector<SubcatSpec>& specs) {
  return run_serial(grid(p, specs), subcategory_case(p, specs));
}
SweepStats sweep_theorem_b(const FamilyParams& p, const std::vector<SubcatSpec>& specs) {
  return run_serial(grid(p, specs), theorem_b_case(p, specs));
}
}  // namespace serial

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

CheckResult from_sweep(std::string name, const SweepStats& s) {
  std::string detail = "cases=" + std::to_string(s.cases) + " failures=" + std::to_string(s.failures);
  if (!s.failing.empty()) detail += " first=" + s.failing.front();
  return CheckResult{std::move(name), s.failures == 0, std::move(detail)};
}

// Accumulates a pass/fail over many cases, keeping the first failure.
struct Tally {
  std::size_t cases = 0;
  std::optional<std::string> first_failure;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok && !first_failure) first_failure = what;
  }
  CheckResult result(std::string name) const {
    std::string detail = "cases=" + std::to_string(cases);
    if (first_failure) detail += " first=" + *first_failure;
    return CheckResult{std::move(name), !first_failure, std::move(detail)};
  }
};

std::vector<SumObject> small_sums(Position lo, Position hi) {
  std::vector<SumObject> out{SumObject{}};
  for (Position a = lo; a <= hi; ++a) {
    out.emplace_back(IndecObject{a});
    for (Position b = a; b <= hi; ++b) out.push_back(SumObject{IndecObject{a}, IndecObject{b}});
  }
  return out;
}

void core_checks(const FamilyParams& p, SuiteReport& report) {
  const Position n = p.period();
  {
    Tally t;
    for (Position x = 1 - n; x <= 2 * n; ++x)
      for (Position y = 1 - n; y <= 2 * n; ++y)
        for (int r = -2; r <= 2; ++r)
          t.check(hom_dim(p, IndecObject{x}, IndecObject{y}) ==
                      hom_dim(p, shift(p, IndecObject{x}, r), shift(p, IndecObject{y}, r)),
                  std::to_string(x) + "->" + std::to_string(y));
    report.checks.push_back(t.result("hom-shift-equivariance"));
  }
  {
    Tally assoc;
    Tally ideal;
    const Position hi = n + p.l();
    for (Position a = 1; a <= n; ++a)
      for (Position b = a; b < a + p.l() && b <= hi; ++b)
        for (Position c = b; c < b + p.l() && c <= hi; ++c) {
          const auto f = basis_mor(p, IndecObject{a}, IndecObject{b});
          const auto g = basis_mor(p, IndecObject{b}, IndecObject{c});
          const auto gf = compose(g, f);
          if (is_radical(f) || is_radical(g)) ideal.check(is_radical(gf), std::to_string(a) + "," + std::to_string(b));
          for (Position e = c; e < c + p.l() && e <= hi; ++e) {
            const auto h = basis_mor(p, IndecObject{c}, IndecObject{e});
            assoc.check(compose(h, gf) == compose(compose(h, g), f),
                        std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c));
          }
        }
    report.checks.push_back(assoc.result("composition-associative"));
    report.checks.push_back(ideal.result("radical-ideal"));
  }
  {
    Tally t;
    const auto sums = small_sums(1, std::min<Position>(n, p.l() + 1));
    for (const auto& src : sums)
      for (const auto& dst : sums) {
        const auto support = hom_support(p, src, dst);
        const std::size_t count = std::size_t{1} << support.size();
        for (std::size_t bits = 0; bits < count; ++bits) {
          Matrix m(dst.size(), src.size());
          for (std::size_t k = 0; k < support.size(); ++k)
            if ((bits >> k) & 1U) m(support[k].first, support[k].second) = 1;
          const Morphism f(p, src, dst, std::move(m));
          t.check((is_split_epi(f) && is_split_mono(f)) == is_iso(f), "split-vs-iso");
        }
      }
    report.checks.push_back(t.result("split-epi-and-mono-iff-iso"));
  }
  {
    Tally t;
    for (Position x = 1; x <= n; ++x) {
      const IndecObject o{x};
      t.check(hom_dim(p, o, o) == 1, "end-dim");
      for (int c : {-1, 0, 1, 2}) {
        const auto f = Rational(c) * Morphism::identity(p, SumObject(o));
        t.check(is_iso(f) == (c != 0), "local-end");
      }
    }
    report.checks.push_back(t.result("local-endomorphism-rings"));
  }
}

void angle_checks(const FamilyParams& p, SuiteReport& report) {
  const Position n = p.period();
  const std::size_t d = static_cast<std::size_t>(p.d());
  Tally structure;
  Tally exact;
  Tally rotation;
  Tally equivariance;
  Tally extension;
  Tally flevel;
  for (Position i = 1; i <= n; ++i)
    for (int delta = 1; delta < p.l(); ++delta) {
      const IndecObject x{i};
      const IndecObject y{i + delta};
      const std::string tag = std::to_string(i) + "->" + std::to_string(i + delta);
      const auto mu = basis_mor(p, x, y);
      const Angle a = min_angle(mu);

      bool shape = true;
      for (const auto& obj : a.objects()) shape = shape && obj.is_indecomposable();
      for (std::size_t k = 0; shape && k + 1 < a.length(); ++k) {
        const auto gap = a.object(k + 1)[0].pos - a.object(k)[0].pos;
        shape = gap == (k % 2 == 0 ? delta : p.l() - delta);
      }
      shape = shape && (a.object(d + 1)[0].pos - a.object(0)[0].pos == p.m() - 1 + delta);
      for (std::size_t k = 1; k < d; ++k) shape = shape && is_radical(a.map(k));
      shape = shape && !a.connecting_map().is_zero() && a.map(d) == mu;
      structure.check(shape, tag);
      exact.check(check_hom_exactness(a).pass, tag);

      Angle r = a;
      for (std::size_t k = 0; k < a.length(); ++k) r = rotate_left(r);
      rotation.check(r == shift(a, 1) && rotate_left(rotate_right(a)) == a, tag);
      equivariance.check(min_angle(shift(mu, 1)) == shift(a, 1) && min_angle(shift(mu, -1)) == shift(a, -1), tag);

      const auto delta_mor = basis_mor(p, x, IndecObject{i + delta});
      const Angle e = extend(delta_mor);
      extension.check(e.connecting_map() == delta_mor && e == rotate_right(min_angle(delta_mor)) &&
                          check_hom_exactness(e).pass,
                      tag);

      if (i + delta <= n) {
        const auto k = d_kernel(mu);
        const auto c = d_cokernel(mu);
        const auto s = d_exact_seq(mu);
        std::size_t nonzero = 0;
        for (const auto& obj : s.objects) nonzero += obj.is_zero() ? 0 : 1;
        flevel.check(check_flevel_exactness(k).pass && check_flevel_exactness(c).pass &&
                         check_flevel_exactness(s).pass && nonzero == d + 2,
                     tag);
      }
    }
  report.checks.push_back(structure.result("min-angle-structure"));
  report.checks.push_back(exact.result("min-angle-hom-exactness"));
  report.checks.push_back(rotation.result("rotation-period-is-shift"));
  report.checks.push_back(equivariance.result("min-angle-shift-equivariance"));
  report.checks.push_back(extension.result("extend-basis-connecting-maps"));
  report.checks.push_back(flevel.result("flevel-kernel-cokernel-exact"));
}

void wide_checks(const FamilyParams& p, SuiteReport& report) {
  const auto wide = enumerate_wide(p);
  const auto oracle = enumerate_wide_oracle(p);
  report.checks.push_back(CheckResult{"classification-matches-oracle", wide == oracle,
                                      "wide=" + std::to_string(wide.size()) + " oracle=" + std::to_string(oracle.size())});
  report.checks.push_back(CheckResult{"parallel-matches-serial", wide == serial::enumerate_wide(p), ""});
  Tally t;
  for (const auto& s : wide) t.check(unbar(p, bar(s)) == s, label("roundtrip", s, 0));
  report.checks.push_back(t.result("unbar-bar-identity"));
  const bool ends = is_wide(SubcatSpec(p, {})) && is_wide(SubcatSpec::full(p));
  report.checks.push_back(CheckResult{"empty-and-full-wide", ends, ""});
}

}  // namespace

SuiteReport run_suite(const FamilyParams& p, std::string_view target) {
  SuiteReport report{std::string(target), {}};
  const bool all = target == "all";
  bool known = all;
  if (all || target == "core") {
    core_checks(p, report);
    known = true;
  }
  if (all || target == "angles") {
    angle_checks(p, report);
    known = true;
  }
  if (all || target == "wide") {
    wide_checks(p, report);
    known = true;
  }
  if (all || target == "ar" || target == "theorem-b") {
    const auto specs = enumerate_wide(p);
    if (all || target == "ar") {
      report.checks.push_back(from_sweep("ar-angle-closure", sweep_ar_closure(p)));
      report.checks.push_back(from_sweep("subcategory-angles-and-covers", sweep_subcategory(p, specs)));
    }
    if (all || target == "theorem-b") report.checks.push_back(from_sweep("theorem-b", sweep_theorem_b(p, specs)));
    known = true;
  }
  if (!known)
    throw DomainError(ErrorKind::ParseError, "unknown verify target '" + std::string(target) +
                                                 "' (expected core, angles, ar, wide, theorem-b or all)");
  return report;
}

}  // namespace angcalc
