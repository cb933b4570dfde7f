#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "angcalc/core.hpp"

namespace angcalc {

/// A S^d-sequence X^0 -> X^1 -> ... -> X^{d+1} -> S^d X^0.
///
/// Construction checks the shape (d+2 objects and maps, each map between the
/// right slots, last map landing in S^d X^0) and that every consecutive
/// composite vanishes, including S^d(xi^0) o xi^{d+1}. Being a complex is
/// necessary but not sufficient for distinguishedness; check_hom_exactness
/// is the sufficient-side oracle.
class Angle {
 public:
  Angle(const FamilyParams& p, std::vector<SumObject> objects, std::vector<Morphism> maps);

  const FamilyParams& params() const noexcept { return params_; }
  /// Number of object slots, d + 2.
  std::size_t length() const noexcept { return objects_.size(); }
  const SumObject& object(std::size_t k) const { return objects_.at(k); }
  const Morphism& map(std::size_t k) const { return maps_.at(k); }
  const std::vector<SumObject>& objects() const noexcept { return objects_; }
  const std::vector<Morphism>& maps() const noexcept { return maps_; }
  /// S^d X^0, the target of the connecting map.
  SumObject closing_object() const;
  const Morphism& connecting_map() const { return maps_.back(); }

  friend bool operator==(const Angle&, const Angle&) = default;

 private:
  FamilyParams params_;
  std::vector<SumObject> objects_;
  std::vector<Morphism> maps_;
};

Angle zero_angle(const FamilyParams& p);

/// X -1-> X -> 0 -> ... -> 0 -> S^d X.
Angle trivial_angle(const FamilyParams& p, const SumObject& x);

/// Drops X^0 and appends S^d X^0 with last map (-1)^d S^d(xi^0) = S^d(xi^0).
Angle rotate_left(const Angle& a);
Angle rotate_right(const Angle& a);

Angle shift(const Angle& a, std::int64_t r);

/// Slotwise direct sum; summands re-sorted and maps block-diagonal.
Angle direct_sum(const Angle& a, const Angle& b);

/// Minimal angle on a nonzero morphism mu between indecomposables.
///
/// For 1 <= Delta = pos(y) - pos(x) <= l - 1 the objects sit at the sorted
/// positions {pos(y) - r*l} and {pos(x) - r*l}, 0 <= r <= d/2, mu occupies
/// X^d -> X^{d+1}, every other map is canonical and the middle maps are
/// radical. Delta = 0 gives the contractible angle x -mu-> y -> 0 ... .
/// Throws BadDistance when mu is zero (including Delta outside [0, l-1]).
Angle min_angle(const Morphism& mu);

/// An angle X^0 -> ... -> X^{d+1} -> S^d X^0 with X^0 = S^-d target(delta),
/// X^{d+1} = source(delta) and connecting map exactly delta.
///
/// delta is first brought to monomial form by unipotent automorphisms of
/// both ends; each nonzero entry then contributes a rotated minimal angle,
/// each unmatched summand a split piece, and the sum is transported back.
Angle extend(const Morphism& delta);

enum class ChainKind { Kernel, Cokernel, Exact };

/// F-level chain attached to mu: f_i -> f_j (indices in [1, period]).
///
/// Kernel: objects A^0..A^d ending at f_i, maps alpha^0..alpha^{d-1},
/// anchor = mu (playing alpha^d). Cokernel: objects A^1..A^{d+1} starting at
/// f_j, maps alpha^1..alpha^d, anchor = mu (playing alpha^0). Exact: the
/// d+2 nonzero terms and d+1 maps, anchor = mu somewhere inside.
struct FLevelChain {
  ChainKind kind;
  std::vector<SumObject> objects;
  std::vector<Morphism> maps;
  Morphism anchor;
};

FLevelChain d_kernel(const Morphism& mu);
FLevelChain d_cokernel(const Morphism& mu);
FLevelChain d_exact_seq(const Morphism& mu);

enum class Variance { Covariant, Contravariant };

struct ExactnessFailure {
  Variance variance;
  Position test_pos;
  /// Index of the offending term in the unrolled sequence that was tested.
  std::size_t slot;
  std::size_t dim;
  std::size_t rank_in;
  std::size_t rank_out;
  bool composite_nonzero;
};

struct ExactnessReport {
  bool pass = true;
  std::size_t checks = 0;
  std::vector<ExactnessFailure> failures;
};

/// Applies Hom(t, -) and Hom(-, t) to the angle unrolled over three periods
/// (S^-d a, a, S^d a) for every indecomposable t with position in
/// [min_pos - period - l + 1, max_pos + period], checking exactness at every
/// interior term. Hom vanishes beyond distance l - 1, so no test object
/// outside that window can see the angle.
ExactnessReport check_hom_exactness(const Angle& a);

/// Definition-level exactness of a d-kernel / d-cokernel / d-exact sequence
/// against every f_t, t in [1, period].
ExactnessReport check_flevel_exactness(const FLevelChain& chain);

}  // namespace angcalc
