#pragma once

// The category F-bar attached to kA_m / rad^l: indecomposables are integer
// positions on the infinite line
//
//   ... -> S^-d f_1 -> ... -> S^-d f_P -> f_1 -> ... -> f_P -> S^d f_1 -> ...
//
// (P = m + l - 1), with every composite of l consecutive arrows zero. Hom
// between indecomposables is one-dimensional exactly when the target sits at
// most l - 1 steps to the right of the source, and S^d is translation by P.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "angcalc/errors.hpp"
#include "angcalc/matrix.hpp"
#include "angcalc/rational.hpp"

namespace angcalc {

using Position = std::int64_t;

class FamilyParams {
 public:
  int d() const noexcept { return d_; }
  int l() const noexcept { return l_; }
  int m() const noexcept { return m_; }
  /// Number of indecomposables of F; S^d shifts positions by this amount.
  int period() const noexcept { return m_ + l_ - 1; }

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;

 private:
  FamilyParams(int d, int l, int m) : d_(d), l_(l), m_(m) {}
  friend FamilyParams validate_params(int d, int l, int m);

  int d_;
  int l_;
  int m_;
};

/// Checks d even and >= 2, l >= 2, m >= 3 and m - 1 = d*l/2.
FamilyParams validate_params(int d, int l, int m);

/// An indecomposable S^{sd} f_i, stored as pos = s * period + i.
struct IndecObject {
  Position pos = 0;

  friend auto operator<=>(const IndecObject&, const IndecObject&) = default;
};

/// pos = shift * period + index with index in [1, period].
IndecObject make_object(const FamilyParams& p, std::int64_t shift, int index);
std::int64_t shift_of(const FamilyParams& p, IndecObject x);
int index_of(const FamilyParams& p, IndecObject x);

/// Finite direct sum of indecomposables; summands are kept sorted by position.
class SumObject {
 public:
  SumObject() = default;
  SumObject(std::vector<IndecObject> summands);
  SumObject(std::initializer_list<IndecObject> summands);
  SumObject(IndecObject x) : summands_{x} {}

  std::size_t size() const noexcept { return summands_.size(); }
  bool is_zero() const noexcept { return summands_.empty(); }
  bool is_indecomposable() const noexcept { return summands_.size() == 1; }
  const IndecObject& operator[](std::size_t i) const { return summands_[i]; }
  auto begin() const noexcept { return summands_.begin(); }
  auto end() const noexcept { return summands_.end(); }
  const std::vector<IndecObject>& summands() const noexcept { return summands_; }

  friend bool operator==(const SumObject&, const SumObject&) = default;

 private:
  std::vector<IndecObject> summands_;
};

SumObject operator+(const SumObject& a, const SumObject& b);

int hom_dim(const FamilyParams& p, IndecObject x, IndecObject y);

/// Morphism between sums; entries(t, s) is the coefficient of the canonical
/// basis morphism from source summand s to target summand t.
class Morphism {
 public:
  /// Throws ShapeMismatch on wrong matrix shape and SupportViolation when a
  /// nonzero entry sits where Hom vanishes.
  Morphism(const FamilyParams& p, SumObject source, SumObject target, Matrix entries);

  static Morphism zero(const FamilyParams& p, SumObject source, SumObject target);
  static Morphism identity(const FamilyParams& p, SumObject object);

  const FamilyParams& params() const noexcept { return params_; }
  const SumObject& source() const noexcept { return source_; }
  const SumObject& target() const noexcept { return target_; }
  const Matrix& entries() const noexcept { return entries_; }
  const Rational& operator()(std::size_t t, std::size_t s) const { return entries_(t, s); }

  bool is_zero() const { return entries_.is_zero(); }

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  FamilyParams params_;
  SumObject source_;
  SumObject target_;
  Matrix entries_;
};

/// Canonical spanning morphism x -> y; throws ZeroHom when Hom(x, y) = 0.
Morphism basis_mor(const FamilyParams& p, IndecObject x, IndecObject y);

/// Single-entry morphism: value at (target summand t, source summand s).
Morphism elementary(const FamilyParams& p, const SumObject& source, const SumObject& target,
                    std::size_t t, std::size_t s, const Rational& value);

/// Index pairs (t, s) with Hom(source[s], target[t]) nonzero.
std::vector<std::pair<std::size_t, std::size_t>> hom_support(const FamilyParams& p,
                                                             const SumObject& source,
                                                             const SumObject& target);

/// g after f. Throws ShapeMismatch unless target(f) == source(g).
Morphism compose(const Morphism& g, const Morphism& f);

Morphism operator+(const Morphism& a, const Morphism& b);
Morphism operator*(const Rational& c, const Morphism& f);

/// Block-diagonal sum; summands of both sides are re-sorted.
Morphism direct_sum(const Morphism& a, const Morphism& b);

IndecObject shift(const FamilyParams& p, IndecObject x, std::int64_t r);
SumObject shift(const FamilyParams& p, const SumObject& x, std::int64_t r);
Morphism shift(const Morphism& f, std::int64_t r);

bool is_radical(const Morphism& f);
bool is_split_epi(const Morphism& f);
bool is_split_mono(const Morphism& f);
bool is_iso(const Morphism& f);

/// Some h with through o h = target, if one exists (target(through) must
/// equal target(target)).
std::optional<Morphism> factor_right(const Morphism& through, const Morphism& target);

/// Some h with h o through = target, if one exists (sources must agree).
std::optional<Morphism> factor_left(const Morphism& through, const Morphism& target);

}  // namespace angcalc
