#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "angcalc/angle.hpp"
#include "angcalc/artheory.hpp"
#include "angcalc/core.hpp"
#include "angcalc/wide.hpp"

namespace ts {

using namespace angcalc;

inline FamilyParams p223() { return validate_params(2, 2, 3); }
inline FamilyParams p234() { return validate_params(2, 3, 4); }
inline FamilyParams p449() { return validate_params(4, 4, 9); }
inline std::vector<FamilyParams> triples() { return {p223(), p234(), p449()}; }

inline IndecObject at(Position q) { return IndecObject{q}; }

/// Flattened summand positions, slot by slot.
inline std::vector<Position> positions(const Angle& a) {
  std::vector<Position> out;
  for (const auto& x : a.objects())
    for (auto y : x) out.push_back(y.pos);
  return out;
}

/// Chain of canonical basis maps on the given indecomposable positions,
/// closed by the basis map to the shift of the first.
inline Angle canonical_angle(const FamilyParams& p, const std::vector<Position>& pos) {
  std::vector<SumObject> objects;
  for (auto q : pos) objects.emplace_back(at(q));
  std::vector<Morphism> maps;
  for (std::size_t k = 0; k + 1 < pos.size(); ++k) maps.push_back(basis_mor(p, at(pos[k]), at(pos[k + 1])));
  maps.push_back(basis_mor(p, at(pos.back()), shift(p, at(pos.front()), 1)));
  return Angle(p, std::move(objects), std::move(maps));
}

// Paths in the linear quiver ... -> q -> q+1 -> ..., modulo paths of length >= l.
// Enumerated arrow by arrow rather than read off the distance.
inline int path_count(const FamilyParams& p, Position x, Position y) {
  int count = 0;
  std::vector<std::pair<Position, int>> stack{{x, 0}};
  while (!stack.empty()) {
    auto [q, len] = stack.back();
    stack.pop_back();
    if (q == y) ++count;
    if (len + 1 < p.l()) stack.push_back({q + 1, len + 1});
  }
  return count;
}

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); }

  SumObject sum(Position lo, Position hi, int max_summands) {
    std::vector<IndecObject> xs;
    const auto n = uniform(1, max_summands);
    for (int i = 0; i < n; ++i) xs.push_back(at(uniform(lo, hi)));
    return SumObject(std::move(xs));
  }

  /// Random morphism with entries in [-2, 2] on the Hom support.
  Morphism mor(const FamilyParams& p, const SumObject& src, const SumObject& dst) {
    Matrix m(dst.size(), src.size());
    for (auto [t, s] : hom_support(p, src, dst)) m(t, s) = Rational(uniform(-2, 2));
    return Morphism(p, src, dst, std::move(m));
  }
};

}  // namespace ts
