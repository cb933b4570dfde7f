#include "angcalc/wide.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "angcalc/angle.hpp"

namespace angcalc {

SubcatSpec::SubcatSpec(const FamilyParams& p, std::vector<int> indices)
    : params_(p), indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  for (int i : indices_) {
    if (i < 1 || i > p.period())
      throw DomainError(ErrorKind::ParseError, "subcategory index " + std::to_string(i) + " outside [1, " +
                                                   std::to_string(p.period()) + "]");
    mask_ |= std::uint64_t{1} << (i - 1);
  }
}

SubcatSpec SubcatSpec::full(const FamilyParams& p) {
  std::vector<int> all(static_cast<std::size_t>(p.period()));
  for (int i = 0; i < p.period(); ++i) all[static_cast<std::size_t>(i)] = i + 1;
  return SubcatSpec(p, std::move(all));
}

SubcatSpec SubcatSpec::from_mask(const FamilyParams& p, std::uint64_t mask) {
  std::vector<int> idx;
  for (int i = 0; i < p.period(); ++i)
    if ((mask >> i) & 1U) idx.push_back(i + 1);
  return SubcatSpec(p, std::move(idx));
}

bool SubcatSpec::contains_index(int i) const {
  return i >= 1 && i <= params_.period() && ((mask_ >> (i - 1)) & 1U);
}

bool SubcatSpec::contains(IndecObject x) const { return contains_index(index_of(params_, x)); }

bool SubcatSpec::contains(const SumObject& x) const {
  return std::all_of(x.begin(), x.end(), [this](IndecObject y) { return contains(y); });
}

bool is_semisimple_wide(const SubcatSpec& s) {
  const auto& p = s.params();
  const auto& idx = s.indices();
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      const int dist = std::abs(idx[a] - idx[b]);
      if (dist < p.l() || dist > p.m() - 1) return false;
    }
  return true;
}

bool is_l_periodic(const SubcatSpec& s) {
  const auto& p = s.params();
  for (int q : s.indices())
    for (int r = q - p.l(); r >= 1; r -= p.l())
      if (!s.contains_index(r)) return false;
  for (int q : s.indices())
    for (int r = q + p.l(); r <= p.period(); r += p.l())
      if (!s.contains_index(r)) return false;
  return true;
}

bool is_wide(const SubcatSpec& s) { return is_semisimple_wide(s) || is_l_periodic(s); }

std::optional<Morphism> wide_oracle_witness(const SubcatSpec& s) {
  const auto& p = s.params();
  const auto d = static_cast<std::size_t>(p.d());
  // S^{+-d}-closure is structural, so one representative y per index suffices.
  for (int yi : s.indices()) {
    const IndecObject y{yi};
    for (int delta = 1; delta <= p.l() - 1; ++delta) {
      const IndecObject sx{y.pos + delta};
      if (!s.contains(sx)) continue;
      const Morphism connecting = basis_mor(p, y, sx);
      const Angle a = min_angle(connecting);
      for (std::size_t k = 0; k < d; ++k)
        if (!s.contains(a.object(k))) return connecting;
    }
  }
  return std::nullopt;
}

bool is_wide_oracle(const SubcatSpec& s) { return !wide_oracle_witness(s).has_value(); }

namespace {

std::vector<SubcatSpec> collect(const FamilyParams& p, const std::vector<char>& keep) {
  std::vector<SubcatSpec> out;
  for (std::size_t mask = 0; mask < keep.size(); ++mask)
    if (keep[mask]) out.push_back(SubcatSpec::from_mask(p, mask));
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t power_set_size(const FamilyParams& p) {
  if (p.period() > 30)
    throw DomainError(ErrorKind::ConstraintViolation, "power-set enumeration limited to period <= 30");
  return std::int64_t{1} << p.period();
}

template <class Pred>
std::vector<SubcatSpec> filter_parallel(const FamilyParams& p, Pred pred) {
  const std::int64_t total = power_set_size(p);
  std::vector<char> keep(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t mask = 0; mask < total; ++mask)
    keep[static_cast<std::size_t>(mask)] = pred(SubcatSpec::from_mask(p, static_cast<std::uint64_t>(mask))) ? 1 : 0;
  return collect(p, keep);
}

template <class Pred>
std::vector<SubcatSpec> filter_serial(const FamilyParams& p, Pred pred) {
  const std::int64_t total = power_set_size(p);
  std::vector<char> keep(static_cast<std::size_t>(total));
  for (std::int64_t mask = 0; mask < total; ++mask)
    keep[static_cast<std::size_t>(mask)] = pred(SubcatSpec::from_mask(p, static_cast<std::uint64_t>(mask))) ? 1 : 0;
  return collect(p, keep);
}

constexpr auto wide_pred = [](const SubcatSpec& s) { return is_wide(s); };
constexpr auto oracle_pred = [](const SubcatSpec& s) { return is_wide_oracle(s); };

}  // namespace

std::vector<SubcatSpec> enumerate_wide(const FamilyParams& p) { return filter_parallel(p, wide_pred); }
std::vector<SubcatSpec> enumerate_wide_oracle(const FamilyParams& p) { return filter_parallel(p, oracle_pred); }

namespace serial {
std::vector<SubcatSpec> enumerate_wide(const FamilyParams& p) { return filter_serial(p, wide_pred); }
std::vector<SubcatSpec> enumerate_wide_oracle(const FamilyParams& p) { return filter_serial(p, oracle_pred); }
}  // namespace serial

MembershipPredicate bar(const SubcatSpec& s) {
  return [s](IndecObject x) { return s.contains(x); };
}

SubcatSpec unbar(const FamilyParams& p, const MembershipPredicate& pred) {
  std::vector<int> idx;
  for (int i = 1; i <= p.period(); ++i)
    if (pred(IndecObject{i})) idx.push_back(i);
  return SubcatSpec(p, std::move(idx));
}

}  // namespace angcalc
