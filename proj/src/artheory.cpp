#include "angcalc/artheory.hpp"

#include <algorithm>
#include <string>

namespace angcalc {

Angle ar_angle(const FamilyParams& p, IndecObject x) {
  return min_angle(basis_mor(p, IndecObject{x.pos - 1}, x));
}

CoverResult cover(const SubcatSpec& s, IndecObject x) {
  const auto& p = s.params();
  for (Position q = x.pos; q > x.pos - p.l(); --q) {
    const IndecObject w{q};
    if (s.contains(w)) return CoverResult{SumObject(w), basis_mor(p, w, x)};
  }
  return CoverResult{SumObject{}, Morphism::zero(p, {}, SumObject(x))};
}

namespace {

void require_wide_member(const SubcatSpec& s, IndecObject x) {
  if (!is_wide(s)) throw DomainError(ErrorKind::NotWide, "subcategory is not wide");
  if (!s.contains(x))
    throw DomainError(ErrorKind::NotMember, "position " + std::to_string(x.pos) + " is not in the subcategory");
}

IndecObject member_end(const SubcatSpec& s, const SumObject& x, const char* which) {
  if (!x.is_indecomposable() || !s.contains(x[0]))
    throw DomainError(ErrorKind::NotMember, std::string(which) + " must be an indecomposable member");
  return x[0];
}

}  // namespace

Angle ar_angle_in(const SubcatSpec& s, IndecObject x) {
  require_wide_member(s, x);
  const auto& p = s.params();
  const Position pos = x.pos;
  const CoverResult c = cover(s, IndecObject{pos - p.m()});
  // pos - period lies in the cover window and is a member, so c is nonzero.
  const IndecObject w = c.source[0];
  const std::size_t n = static_cast<std::size_t>(p.d()) + 2;

  if ((pos - w.pos) % p.l() == 0) {
    std::vector<SumObject> objects(n);
    objects[0] = SumObject(shift(p, x, -1));
    objects[n - 1] = SumObject(x);
    std::vector<Morphism> maps{Morphism::zero(p, objects[0], {})};
    for (std::size_t k = 1; k + 2 < n; ++k) maps.push_back(Morphism::zero(p, {}, {}));
    maps.push_back(Morphism::zero(p, {}, objects[n - 1]));
    maps.push_back(Morphism::identity(p, objects[n - 1]));
    return Angle(p, std::move(objects), std::move(maps));
  }

  std::vector<Position> positions;
  for (int r = 0; r <= p.d() / 2; ++r) {
    positions.push_back(w.pos + r * p.l());
    positions.push_back(pos - r * p.l());
  }
  std::sort(positions.begin(), positions.end());
  std::vector<SumObject> objects;
  for (auto q : positions) objects.emplace_back(IndecObject{q});
  std::vector<Morphism> maps;
  for (std::size_t k = 0; k + 1 < n; ++k) maps.push_back(basis_mor(p, objects[k][0], objects[k + 1][0]));
  maps.push_back(basis_mor(p, x, shift(p, w, 1)));
  return Angle(p, std::move(objects), std::move(maps));
}

bool is_right_almost_split(const SubcatSpec& s, const Morphism& xi) {
  const IndecObject x = member_end(s, xi.target(), "target");
  if (is_split_epi(xi)) return false;
  const auto& p = s.params();
  for (Position q = x.pos - p.l() + 1; q < x.pos; ++q) {
    const IndecObject w{q};
    if (!s.contains(w)) continue;
    if (!factor_right(xi, basis_mor(p, w, x))) return false;
  }
  return true;
}

bool is_left_almost_split(const SubcatSpec& s, const Morphism& xi) {
  const IndecObject x = member_end(s, xi.source(), "source");
  if (is_split_mono(xi)) return false;
  const auto& p = s.params();
  for (Position q = x.pos + 1; q <= x.pos + p.l() - 1; ++q) {
    const IndecObject w{q};
    if (!s.contains(w)) continue;
    if (!factor_left(xi, basis_mor(p, x, w))) return false;
  }
  return true;
}

// The solutions of xi o phi = xi form id + K with K = { psi : xi o psi = 0 },
// a right ideal of End(source). If K lies in the radical every solution is
// invertible. Otherwise the image of K modulo the radical is a nonzero right
// ideal of a semisimple ring, so it contains a nonzero idempotent e, and
// id - (a lift of e) is a non-invertible solution. Hence: right minimal iff
// every vector of a basis of K vanishes on equal-position entries.
bool is_right_minimal(const Morphism& xi) {
  const auto& p = xi.params();
  const SumObject& y = xi.source();
  const auto unknowns = hom_support(p, y, y);
  const std::size_t eqs = xi.target().size() * y.size();
  Matrix a(eqs, unknowns.size());
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    const auto img = compose(xi, elementary(p, y, y, unknowns[k].first, unknowns[k].second, 1));
    std::size_t e = 0;
    for (std::size_t r = 0; r < img.target().size(); ++r)
      for (std::size_t c = 0; c < img.source().size(); ++c) a(e++, k) = img(r, c);
  }
  for (const auto& v : nullspace(a))
    for (std::size_t k = 0; k < unknowns.size(); ++k)
      if (!is_zero(v[k]) && y[unknowns[k].first] == y[unknowns[k].second]) return false;
  return true;
}

bool is_precover(const SubcatSpec& s, const Morphism& xi) {
  if (!s.contains(xi.source())) return false;
  const auto& p = s.params();
  const SumObject& x = xi.target();
  for (std::size_t t = 0; t < x.size(); ++t)
    for (Position q = x[t].pos - p.l() + 1; q <= x[t].pos; ++q) {
      const IndecObject w{q};
      if (!s.contains(w)) continue;
      if (!factor_right(xi, elementary(p, SumObject(w), x, t, 0, 1))) return false;
    }
  return true;
}

bool is_cover(const SubcatSpec& s, const Morphism& xi) { return is_precover(s, xi) && is_right_minimal(xi); }

ArAngleCheck check_ar_angle(const SubcatSpec& s, const Angle& a) {
  for (std::size_t k = 0; k < a.length(); ++k)
    if (!s.contains(a.object(k)))
      throw DomainError(ErrorKind::NotMember, "object in slot " + std::to_string(k) + " is not in the subcategory");
  ArAngleCheck out;
  const std::size_t d = a.length() - 2;
  out.ends_indecomposable = a.object(0).is_indecomposable() && a.object(d + 1).is_indecomposable();
  if (!out.ends_indecomposable) return out;
  out.left_almost_split = is_left_almost_split(s, a.map(0));
  out.right_almost_split = is_right_almost_split(s, a.map(d));
  out.middle_radical = true;
  for (std::size_t k = 1; k < d; ++k) out.middle_radical = out.middle_radical && is_radical(a.map(k));
  return out;
}

bool is_ar_angle(const SubcatSpec& s, const Angle& a) { return check_ar_angle(s, a).ok(); }

TheoremBReport theorem_b_check(const SubcatSpec& s, IndecObject x) {
  require_wide_member(s, x);
  const auto& p = s.params();
  Angle ambient = ar_angle(p, x);
  const IndecObject head = ambient.object(0)[0];

  bool hypothesis = false;
  for (Position q = x.pos; q <= x.pos + p.l() - 1 && !hypothesis; ++q)
    hypothesis = s.contains(IndecObject{q});

  CoverResult c = cover(s, head);
  const bool cover_side = !c.source.is_zero() && is_cover(s, c.mor);
  Angle sub = ar_angle_in(s, x);
  const ArAngleCheck sub_check = check_ar_angle(s, sub);
  const bool angle_side = sub_check.ok() && sub.object(sub.length() - 1) == SumObject(x);
  const bool heads_agree = sub.object(0) == c.source;

  TheoremBReport r{x, std::move(ambient), hypothesis, std::move(c), cover_side, std::move(sub), sub_check,
                   angle_side, heads_agree, false};
  r.pass = r.hypothesis && (r.cover_side == r.angle_side) && (!r.cover_side || r.heads_agree);
  return r;
}

}  // namespace angcalc
