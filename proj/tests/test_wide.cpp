#include <doctest.h>

#include <algorithm>

#include "support.hpp"

using namespace angcalc;
using ts::at;

TEST_CASE("spec construction") {
  const auto p = ts::p449();
  const SubcatSpec s(p, {9, 1, 5, 1});
  CHECK(s.indices() == std::vector<int>{1, 5, 9});
  CHECK(s.contains(at(-3)));
  CHECK(s.contains(at(13)));
  CHECK_FALSE(s.contains(at(2)));
  CHECK(s.contains(SumObject{at(1), at(17)}));
  CHECK_FALSE(s.contains(SumObject{at(1), at(2)}));
  CHECK(SubcatSpec::from_mask(p, s.mask()) == s);
  CHECK_THROWS_AS(SubcatSpec(p, {0}), DomainError);
  CHECK_THROWS_AS(SubcatSpec(p, {13}), DomainError);
}

TEST_CASE("classification examples") {
  const auto p = ts::p449();
  CHECK(is_semisimple_wide(SubcatSpec(p, {1, 5, 9})));
  CHECK(is_semisimple_wide(SubcatSpec(p, {})));
  CHECK(is_semisimple_wide(SubcatSpec(p, {7})));
  CHECK_FALSE(is_semisimple_wide(SubcatSpec(p, {1, 2})));
  CHECK(is_l_periodic(SubcatSpec(p, {1, 2, 5, 6, 9, 10})));
  CHECK(is_l_periodic(SubcatSpec(p, {})));
  CHECK_FALSE(is_l_periodic(SubcatSpec(p, {1, 5})));
  CHECK(is_wide(SubcatSpec(p, {1, 2, 5, 6, 9, 10})));
  CHECK_FALSE(is_wide(SubcatSpec(p, {1, 2})));
  CHECK(is_wide(SubcatSpec::full(p)));
}

TEST_CASE("oracle witnesses") {
  const auto p = ts::p449();
  const auto w = wide_oracle_witness(SubcatSpec(p, {1, 2}));
  REQUIRE(w.has_value());
  CHECK_FALSE(w->is_zero());
  CHECK_FALSE(wide_oracle_witness(SubcatSpec(p, {1, 2, 5, 6, 9, 10})).has_value());
}

TEST_CASE("enumeration counts") {
  struct Row {
    FamilyParams p;
    std::size_t wide, semisimple, periodic;
  };
  for (const auto& r : {Row{ts::p223(), 8, 7, 4}, Row{ts::p234(), 14, 10, 8}, Row{ts::p449(), 58, 47, 16}}) {
    const auto specs = enumerate_wide(r.p);
    CHECK(specs.size() == r.wide);
    CHECK(std::count_if(specs.begin(), specs.end(), is_semisimple_wide) == static_cast<long>(r.semisimple));
    CHECK(std::count_if(specs.begin(), specs.end(), is_l_periodic) == static_cast<long>(r.periodic));
    CHECK(std::is_sorted(specs.begin(), specs.end()));
  }
}

TEST_CASE("classification agrees with the oracle subset for subset") {
  for (const auto& p : ts::triples()) CHECK(enumerate_wide(p) == enumerate_wide_oracle(p));
}

TEST_CASE("classification agrees with the oracle at a larger triple") {
  const auto p = validate_params(2, 4, 5);
  CHECK(enumerate_wide(p) == enumerate_wide_oracle(p));
}

TEST_CASE("bar and unbar") {
  for (const auto& p : ts::triples()) {
    for (const auto& s : enumerate_wide(p)) {
      CHECK(unbar(p, bar(s)) == s);
      const auto pred = bar(s);
      for (Position q = -2 * p.period(); q <= 2 * p.period(); ++q) {
        CHECK(pred(at(q)) == pred(shift(p, at(q), 1)));
        CHECK(pred(at(q)) == s.contains(at(q)));
      }
    }
  }
}

TEST_CASE("closed predicates are exactly the wide specs (small params)") {
  for (const auto& p : {ts::p223(), ts::p234()}) {
    std::vector<SubcatSpec> via_pred;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.period()); ++mask) {
      const auto s = SubcatSpec::from_mask(p, mask);
      const MembershipPredicate pred = [&](IndecObject x) { return s.contains(x); };
      const auto back = unbar(p, pred);
      CHECK(back == s);
      if (is_wide_oracle(back)) via_pred.push_back(back);
    }
    std::sort(via_pred.begin(), via_pred.end());
    CHECK(via_pred == enumerate_wide(p));
  }
}
