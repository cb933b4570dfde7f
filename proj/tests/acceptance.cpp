// Acceptance run: one PASS/FAIL line per criterion. `acceptance N` runs only
// criterion N. Exit status is nonzero when any selected criterion fails.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "angcalc/cli.hpp"
#include "angcalc/io.hpp"
#include "angcalc/verify.hpp"
#include "support.hpp"

using namespace angcalc;
using ts::at;
using ts::canonical_angle;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

io::Json cli_json(const std::vector<std::string>& args, Outcome& o) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (code != 0) {
    o.require(false, "exit " + std::to_string(code) + " for " + args.back());
    return io::Json{};
  }
  return io::Json::parse(out.str());
}

std::vector<std::string> p449_args(std::vector<std::string> rest) {
  std::vector<std::string> a{"--d", "4", "--l", "4", "--m", "9"};
  a.insert(a.end(), rest.begin(), rest.end());
  return a;
}

Angle cli_angle(const std::vector<std::string>& rest, Outcome& o) {
  const auto j = cli_json(p449_args(rest), o);
  if (!o.pass) return zero_angle(ts::p449());
  return io::angle_from_json(j);
}

void golden(Outcome& o) {
  const auto p = ts::p449();
  o.require(cli_angle({"ar", "f1"}, o) == canonical_angle(p, {-8, -7, -4, -3, 0, 1}), "ar f1");
  o.require(cli_angle({"ar", "f5"}, o) == canonical_angle(p, {-4, -3, 0, 1, 4, 5}), "ar f5");
  o.require(cli_angle({"ar", "f10"}, o) == canonical_angle(p, {1, 2, 5, 6, 9, 10}), "ar f10");
}

void subcategory_golden(Outcome& o) {
  const auto p = ts::p449();
  const std::string s = "1,2,5,6,9,10";
  const SubcatSpec spec(p, {1, 2, 5, 6, 9, 10});
  const auto c = cli_json(p449_args({"cover", "--sub", s, "s-1:f4"}), o);
  o.require(o.pass && c["source"] == io::to_json(p, SumObject(make_object(p, -1, 2))), "cover s-1:f4");
  o.require(cli_angle({"ar", "--sub", s, "f1"}, o) == canonical_angle(p, {-10, -7, -6, -3, -2, 1}), "ar --sub f1");
  // The second displayed angle, S^-4 f6 -> S^-4 f9 -> S^-4 f10 -> f1 -> f2 -> f5 (closing object f6),
  // is the AR angle ending at f5.
  o.require(cli_angle({"ar", "--sub", s, "f5"}, o) == canonical_angle(p, {-6, -3, -2, 1, 2, 5}),
            "second displayed angle");
  const Angle a6 = cli_angle({"ar", "--sub", s, "f6"}, o);
  o.require(a6 == canonical_angle(p, {-3, -2, 1, 2, 5, 6}) && is_ar_angle(spec, a6) && check_hom_exactness(a6).pass,
            "ar --sub f6");
  o.require(cli_angle({"ar", "--sub", s, "f10"}, o) == ar_angle(p, at(10)), "ar --sub f10 = ambient");
  if (o.pass) o.detail = "second displayed angle matched at x = f5 (closing object f6); x = f6 checked by oracles";
}

void oracle_closure(Outcome& o) {
  for (const auto& p : ts::triples()) {
    const auto specs = enumerate_wide(p);
    const auto a = sweep_ar_closure(p);
    const auto s = sweep_subcategory(p, specs);
    o.require(a.failures == 0, "ambient " + std::to_string(a.failures));
    o.require(s.failures == 0, "subcategory " + std::to_string(s.failures));
    if (o.pass) o.detail += (o.detail.empty() ? "" : ", ") + std::to_string(a.cases + s.cases) + " cases";
  }
}

void theorem_b(Outcome& o) {
  std::size_t degenerate = 0, cases = 0;
  for (const auto& p : ts::triples()) {
    const auto specs = enumerate_wide(p);
    const auto b = sweep_theorem_b(p, specs);
    o.require(b.failures == 0, std::to_string(b.failures) + " failures");
    cases += b.cases;
    for (const auto& s : specs) {
      const bool single_class = !s.empty() && is_l_periodic(s) && is_semisimple_wide(s);
      if (!is_semisimple_wide(s) && !single_class) continue;
      for (int idx : s.indices()) {
        const auto r = theorem_b_check(s, at(idx));
        o.require(r.pass, "degenerate-branch case");
        if (r.sub_angle.object(1).is_zero()) ++degenerate;
      }
    }
  }
  o.require(degenerate > 0, "degenerate branch never reached");
  if (o.pass) o.detail = std::to_string(cases) + " cases, " + std::to_string(degenerate) + " degenerate";
}

void bijection(Outcome& o) {
  for (const auto& p : ts::triples())
    for (const auto& s : enumerate_wide(p)) {
      o.require(unbar(p, bar(s)) == s, "unbar(bar(S)) != S");
      const auto pred = bar(s);
      for (Position q = -2 * p.period(); q <= 2 * p.period(); ++q)
        o.require(pred(at(q)) == pred(shift(p, at(q), 1)), "bar image not shift-closed");
    }
  for (const auto& p : {ts::p223(), ts::p234()}) {
    // Every shift-closed predicate is determined by its fundamental window.
    std::vector<SubcatSpec> closed_wide;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.period()); ++mask) {
      const auto w = SubcatSpec::from_mask(p, mask);
      const MembershipPredicate pred = [&](IndecObject x) { return w.contains(x); };
      if (is_wide_oracle(unbar(p, pred))) closed_wide.push_back(unbar(p, pred));
    }
    std::sort(closed_wide.begin(), closed_wide.end());
    std::vector<SubcatSpec> image;
    for (const auto& s : enumerate_wide(p)) image.push_back(unbar(p, bar(s)));
    o.require(image == closed_wide, "bar image differs from closed wide specs");
  }
}

void counts(Outcome& o) {
  const std::pair<FamilyParams, std::size_t> expected[] = {{ts::p223(), 8}, {ts::p234(), 14}, {ts::p449(), 58}};
  for (const auto& [p, n] : expected) {
    const auto specs = enumerate_wide(p);
    o.require(specs.size() == n, "count " + std::to_string(specs.size()) + " != " + std::to_string(n));
    o.require(specs == enumerate_wide_oracle(p), "classification != oracle filter");
  }
  if (o.pass) o.detail = "8 / 14 / 58, subset-for-subset";
}

void structure(Outcome& o) {
  for (const auto& p : ts::triples()) {
    const std::size_t d = static_cast<std::size_t>(p.d());
    for (Position i = 1; i <= p.period(); ++i)
      for (int delta = 1; delta < p.l(); ++delta) {
        const auto mu = basis_mor(p, at(i), at(i + delta));
        const Angle a = min_angle(mu);
        const auto pos = ts::positions(a);
        bool ok = pos.size() == d + 2;
        for (const auto& x : a.objects()) ok = ok && x.is_indecomposable();
        for (std::size_t k = 0; ok && k + 1 < pos.size(); ++k)
          ok = pos[k + 1] - pos[k] == (k % 2 == 0 ? delta : p.l() - delta);
        ok = ok && pos.back() - pos.front() == p.m() - 1 + delta;
        o.require(ok, "min_angle shape at " + std::to_string(i) + "+" + std::to_string(delta));
        Angle r = a;
        for (std::size_t k = 0; k < d + 2; ++k) r = rotate_left(r);
        o.require(r == shift(a, 1), "rotation period");
        if (i + delta <= p.period())
          o.require(check_flevel_exactness(d_exact_seq(mu)).pass, "d_exact_seq exactness");
      }
  }
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<void(Outcome&)> body;
};

}  // namespace

int main(int argc, char** argv) {
  const Criterion all[] = {
      {1, "golden AR angles", 1.0, golden},
      {2, "subcategory golden examples", 1.0, subcategory_golden},
      {3, "oracle closure", 30.0, oracle_closure},
      {4, "cover / AR-angle equivalence", 30.0, theorem_b},
      {5, "bar / unbar bijection", 0.0, bijection},
      {6, "enumeration counts", 60.0, counts},
      {7, "structural properties", 0.0, structure},
  };
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all_pass = true;
  for (const auto& c : all) {
    if (only && c.id != only) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs >= c.budget_s) o.require(false, "over time budget");
    all_pass = all_pass && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << ") " << secs << "s"
              << (o.detail.empty() ? "" : ": " + o.detail) << "\n";
  }
  return all_pass ? 0 : 1;
}
