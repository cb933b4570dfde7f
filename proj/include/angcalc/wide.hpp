#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "angcalc/core.hpp"

namespace angcalc {

/// Index set S in {1..period} presenting add{ S^{rd} f_s : s in S, r in Z }.
/// Closure under S^{+-d} is built in: a position is a member iff its index is.
class SubcatSpec {
 public:
  /// Throws ParseError on an index outside [1, period]; duplicates collapse.
  SubcatSpec(const FamilyParams& p, std::vector<int> indices);

  static SubcatSpec full(const FamilyParams& p);
  static SubcatSpec from_mask(const FamilyParams& p, std::uint64_t mask);

  const FamilyParams& params() const noexcept { return params_; }
  const std::vector<int>& indices() const noexcept { return indices_; }
  bool empty() const noexcept { return indices_.empty(); }
  bool contains_index(int i) const;
  bool contains(IndecObject x) const;
  bool contains(const SumObject& x) const;
  std::uint64_t mask() const noexcept { return mask_; }

  friend bool operator==(const SubcatSpec& a, const SubcatSpec& b) { return a.indices_ == b.indices_; }
  friend bool operator<(const SubcatSpec& a, const SubcatSpec& b) { return a.indices_ < b.indices_; }

 private:
  FamilyParams params_;
  std::vector<int> indices_;
  std::uint64_t mask_ = 0;
};

/// Distinct members pairwise at distance in [l, m-1].
bool is_semisimple_wide(const SubcatSpec& s);
/// q in S implies q + r*l in S whenever it stays in [1, period].
bool is_l_periodic(const SubcatSpec& s);
bool is_wide(const SubcatSpec& s);

/// First-principles closure under d-extensions: for every member y and
/// member S^d x with 1 <= pos(S^d x) - pos(y) <= l - 1, the middle terms of
/// the minimal angle on the connecting basis morphism y -> S^d x must be
/// members. Returns the first connecting morphism that fails.
std::optional<Morphism> wide_oracle_witness(const SubcatSpec& s);
bool is_wide_oracle(const SubcatSpec& s);

/// All wide S in lexicographic order of their sorted index lists.
/// OpenMP-parallel over the power set; see serial:: for the reference.
std::vector<SubcatSpec> enumerate_wide(const FamilyParams& p);
/// Power-set filter by is_wide_oracle (parallel).
std::vector<SubcatSpec> enumerate_wide_oracle(const FamilyParams& p);

namespace serial {
std::vector<SubcatSpec> enumerate_wide(const FamilyParams& p);
std::vector<SubcatSpec> enumerate_wide_oracle(const FamilyParams& p);
}  // namespace serial

using MembershipPredicate = std::function<bool(IndecObject)>;

/// W -> W-bar: position p is a member iff its index lies in S.
MembershipPredicate bar(const SubcatSpec& s);
/// Restriction of a S^{+-d}-closed predicate to the fundamental window.
SubcatSpec unbar(const FamilyParams& p, const MembershipPredicate& pred);

}  // namespace angcalc
