#pragma once

#include <optional>

#include "angcalc/angle.hpp"
#include "angcalc/core.hpp"
#include "angcalc/wide.hpp"

namespace angcalc {

/// AR (d+2)-angle in F-bar ending at x: the minimal angle on the arrow
/// pos(x) - 1 -> pos(x).
Angle ar_angle(const FamilyParams& p, IndecObject x);

/// W-cover phi: W^0 -> X^0; source is zero or a single indecomposable.
struct CoverResult {
  SumObject source;
  Morphism mor;
};

/// The member of maximal position among x and the l - 1 objects to its left,
/// with its canonical morphism to x; zero when no such member exists.
CoverResult cover(const SubcatSpec& s, IndecObject x);

/// AR angle in W-bar ending at the member x. Throws NotWide / NotMember.
///
/// With p = pos(x) and w = cover(S, p - m).source: if w sits in the residue
/// class of p mod l the answer is S^-d x -> 0 -> ... -> 0 -> x -1-> x,
/// otherwise the angle on the sorted positions {w + r l} and {p - r l},
/// 0 <= r <= d/2, with canonical maps.
Angle ar_angle_in(const SubcatSpec& s, IndecObject x);

// The quantifier "for every Y in W and every non-split morphism Y -> X" is
// reduced to indecomposable Y inside the Hom window of X and to canonical
// basis morphisms: a morphism out of a sum is non-split exactly when each
// component is radical, Hom spaces are at most one-dimensional, and radical
// morphisms between indecomposables are multiples of the basis morphism.

/// Target must be an indecomposable member (NotMember otherwise).
bool is_right_almost_split(const SubcatSpec& s, const Morphism& xi);
/// Source must be an indecomposable member (NotMember otherwise).
bool is_left_almost_split(const SubcatSpec& s, const Morphism& xi);

/// Every endomorphism phi of the source with xi o phi = xi is invertible.
bool is_right_minimal(const Morphism& xi);

bool is_precover(const SubcatSpec& s, const Morphism& xi);
bool is_cover(const SubcatSpec& s, const Morphism& xi);

struct ArAngleCheck {
  bool ends_indecomposable = false;
  bool left_almost_split = false;
  bool right_almost_split = false;
  bool middle_radical = false;

  bool ok() const { return ends_indecomposable && left_almost_split && right_almost_split && middle_radical; }
};

/// All objects must be members of W-bar (NotMember otherwise).
ArAngleCheck check_ar_angle(const SubcatSpec& s, const Angle& a);
bool is_ar_angle(const SubcatSpec& s, const Angle& a);

struct TheoremBReport {
  IndecObject target;
  Angle ambient;
  /// A nonzero W -> S^d U^0 with U^0 in W exists.
  bool hypothesis = false;
  CoverResult head_cover;
  /// (a): head_cover is a nonzero W-cover of the ambient X^0.
  bool cover_side = false;
  Angle sub_angle;
  ArAngleCheck sub_check;
  /// (b): sub_angle is an AR angle in W ending at target.
  bool angle_side = false;
  /// source(cover) equals the first object of sub_angle.
  bool heads_agree = false;
  bool pass = false;
};

/// Computes both sides of the cover / AR-angle equivalence for a wide S and
/// member x. Throws NotWide / NotMember.
TheoremBReport theorem_b_check(const SubcatSpec& s, IndecObject x);

}  // namespace angcalc
