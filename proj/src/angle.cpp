#include "angcalc/angle.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <tuple>

namespace angcalc {

Angle::Angle(const FamilyParams& p, std::vector<SumObject> objects, std::vector<Morphism> maps)
    : params_(p), objects_(std::move(objects)), maps_(std::move(maps)) {
  const std::size_t n = static_cast<std::size_t>(p.d()) + 2;
  if (objects_.size() != n || maps_.size() != n)
    throw DomainError(ErrorKind::NotAnAngle, "an angle needs exactly d+2 objects and d+2 maps");
  for (std::size_t k = 0; k < n; ++k) {
    const SumObject& want_target = (k + 1 < n) ? objects_[k + 1] : closing_object();
    if (!(maps_[k].source() == objects_[k]) || !(maps_[k].target() == want_target) || !(maps_[k].params() == p))
      throw DomainError(ErrorKind::NotAnAngle, "map " + std::to_string(k) + " does not connect its slots");
  }
  for (std::size_t k = 0; k + 1 < n; ++k)
    if (!compose(maps_[k + 1], maps_[k]).is_zero())
      throw DomainError(ErrorKind::NotAnAngle,
                        "maps " + std::to_string(k) + " and " + std::to_string(k + 1) + " compose to nonzero");
  if (!compose(shift(maps_[0], 1), maps_[n - 1]).is_zero())
    throw DomainError(ErrorKind::NotAnAngle, "connecting map composes with S^d(xi^0) to nonzero");
}

SumObject Angle::closing_object() const { return shift(params_, objects_.front(), 1); }

namespace {

std::size_t slots(const FamilyParams& p) { return static_cast<std::size_t>(p.d()) + 2; }

struct SumLayout {
  Angle angle;
  // where[c][k][i] = index in slot k of the sum of summand i of part c's slot k.
  std::vector<std::vector<std::vector<std::size_t>>> where;
};

SumLayout sum_with_layout(const FamilyParams& p, const std::vector<Angle>& parts) {
  const std::size_t n = slots(p);
  std::vector<std::vector<std::vector<std::size_t>>> where(parts.size(),
                                                           std::vector<std::vector<std::size_t>>(n));
  std::vector<SumObject> objects(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::tuple<Position, std::size_t, std::size_t>> all;
    for (std::size_t c = 0; c < parts.size(); ++c)
      for (std::size_t i = 0; i < parts[c].object(k).size(); ++i)
        all.emplace_back(parts[c].object(k)[i].pos, c, i);
    std::stable_sort(all.begin(), all.end(),
                     [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
    std::vector<IndecObject> summands;
    for (std::size_t g = 0; g < all.size(); ++g) {
      const auto& [pos, c, i] = all[g];
      where[c][k].resize(parts[c].object(k).size());
      where[c][k][i] = g;
      summands.push_back(IndecObject{pos});
    }
    objects[k] = SumObject(std::move(summands));
  }

  std::vector<Morphism> maps;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t to = (k + 1) % n;
    const SumObject target = (k + 1 < n) ? objects[to] : shift(p, objects[0], 1);
    Matrix m(target.size(), objects[k].size());
    for (std::size_t c = 0; c < parts.size(); ++c) {
      const Morphism& f = parts[c].map(k);
      for (std::size_t t = 0; t < f.target().size(); ++t)
        for (std::size_t s = 0; s < f.source().size(); ++s) m(where[c][to][t], where[c][k][s]) = f(t, s);
    }
    maps.emplace_back(p, objects[k], target, std::move(m));
  }
  return SumLayout{Angle(p, std::move(objects), std::move(maps)), std::move(where)};
}

Morphism permutation(const FamilyParams& p, const SumObject& from, const SumObject& to,
                     const std::vector<std::size_t>& image) {
  Matrix m(to.size(), from.size());
  for (std::size_t i = 0; i < image.size(); ++i) m(image[i], i) = 1;
  return Morphism(p, from, to, std::move(m));
}

void require_indecomposable_ends(const Morphism& mu, const char* what) {
  if (!mu.source().is_indecomposable() || !mu.target().is_indecomposable())
    throw DomainError(ErrorKind::BadDistance, std::string(what) + ": expects a morphism between indecomposables");
}

}  // namespace

Angle zero_angle(const FamilyParams& p) {
  const std::size_t n = slots(p);
  std::vector<Morphism> maps(n, Morphism::zero(p, {}, {}));
  return Angle(p, std::vector<SumObject>(n), std::move(maps));
}

Angle trivial_angle(const FamilyParams& p, const SumObject& x) {
  const std::size_t n = slots(p);
  std::vector<SumObject> objects(n);
  objects[0] = x;
  objects[1] = x;
  std::vector<Morphism> maps;
  maps.push_back(Morphism::identity(p, x));
  maps.push_back(Morphism::zero(p, x, {}));
  for (std::size_t k = 2; k + 1 < n; ++k) maps.push_back(Morphism::zero(p, {}, {}));
  maps.push_back(Morphism::zero(p, {}, shift(p, x, 1)));
  return Angle(p, std::move(objects), std::move(maps));
}

Angle rotate_left(const Angle& a) {
  const auto& p = a.params();
  std::vector<SumObject> objects(a.objects().begin() + 1, a.objects().end());
  objects.push_back(a.closing_object());
  std::vector<Morphism> maps(a.maps().begin() + 1, a.maps().end());
  // (-1)^d = 1 since d is even throughout the family.
  maps.push_back(shift(a.map(0), 1));
  return Angle(p, std::move(objects), std::move(maps));
}

Angle rotate_right(const Angle& a) {
  const auto& p = a.params();
  std::vector<SumObject> objects{shift(p, a.objects().back(), -1)};
  objects.insert(objects.end(), a.objects().begin(), a.objects().end() - 1);
  std::vector<Morphism> maps{shift(a.maps().back(), -1)};
  maps.insert(maps.end(), a.maps().begin(), a.maps().end() - 1);
  return Angle(p, std::move(objects), std::move(maps));
}

Angle shift(const Angle& a, std::int64_t r) {
  const auto& p = a.params();
  std::vector<SumObject> objects;
  std::vector<Morphism> maps;
  for (const auto& x : a.objects()) objects.push_back(shift(p, x, r));
  for (const auto& f : a.maps()) maps.push_back(shift(f, r));
  return Angle(p, std::move(objects), std::move(maps));
}

Angle direct_sum(const Angle& a, const Angle& b) {
  if (!(a.params() == b.params())) throw DomainError(ErrorKind::ShapeMismatch, "direct sum across families");
  return sum_with_layout(a.params(), {a, b}).angle;
}

Angle min_angle(const Morphism& mu) {
  require_indecomposable_ends(mu, "min_angle");
  const auto& p = mu.params();
  const IndecObject x = mu.source()[0];
  const IndecObject y = mu.target()[0];
  if (is_zero(mu(0, 0)))
    throw DomainError(ErrorKind::BadDistance, "min_angle: morphism is zero (distance " +
                                                  std::to_string(y.pos - x.pos) + ")");
  const std::size_t n = slots(p);

  if (x == y) {
    std::vector<SumObject> objects(n);
    objects[0] = SumObject(x);
    objects[1] = SumObject(y);
    std::vector<Morphism> maps{mu, Morphism::zero(p, objects[1], {})};
    for (std::size_t k = 2; k + 1 < n; ++k) maps.push_back(Morphism::zero(p, {}, {}));
    maps.push_back(Morphism::zero(p, {}, shift(p, objects[0], 1)));
    return Angle(p, std::move(objects), std::move(maps));
  }

  const int half = p.d() / 2;
  std::vector<SumObject> objects;
  for (int r = 0; r <= half; ++r) {
    objects.emplace_back(IndecObject{x.pos - (half - r) * p.l()});
    objects.emplace_back(IndecObject{y.pos - (half - r) * p.l()});
  }
  std::vector<Morphism> maps;
  for (std::size_t k = 0; k + 2 < n; ++k) maps.push_back(basis_mor(p, objects[k][0], objects[k + 1][0]));
  maps.push_back(mu);
  maps.push_back(basis_mor(p, y, shift(p, objects[0][0], 1)));
  return Angle(p, std::move(objects), std::move(maps));
}

Angle extend(const Morphism& delta) {
  const auto& p = delta.params();
  const SumObject& y = delta.source();
  const SumObject& sx = delta.target();  // S^d x
  const SumObject x = shift(p, sx, -1);

  // Unipotent row operations (automorphisms of S^d x) accumulate in alpha,
  // column operations (automorphisms of y) in beta; reduced = alpha delta beta.
  Morphism reduced = delta;
  Morphism alpha = Morphism::identity(p, sx);
  Morphism beta = Morphism::identity(p, y);
  std::vector<bool> row_live(sx.size(), true);
  std::vector<bool> col_live(y.size(), true);
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> pairs;

  for (;;) {
    // Pivot: rightmost live column carrying a nonzero entry, then the
    // leftmost live row in it. Both clearing passes are then legal
    // automorphisms (the Hom they use is nonzero).
    std::optional<std::size_t> col;
    for (std::size_t c = 0; c < y.size(); ++c) {
      if (!col_live[c]) continue;
      for (std::size_t r = 0; r < sx.size(); ++r)
        if (row_live[r] && !is_zero(reduced(r, c)) && (!col || y[c] >= y[*col])) col = c;
    }
    if (!col) break;
    const std::size_t c = *col;
    std::size_t r = sx.size();
    for (std::size_t rr = 0; rr < sx.size(); ++rr)
      if (row_live[rr] && !is_zero(reduced(rr, c)) && (r == sx.size() || sx[rr] < sx[r])) r = rr;

    for (std::size_t rr = 0; rr < sx.size(); ++rr) {
      if (rr == r || !row_live[rr] || is_zero(reduced(rr, c))) continue;
      const Rational lambda = -reduced(rr, c) / reduced(r, c);
      const auto e = Morphism::identity(p, sx) + elementary(p, sx, sx, rr, r, lambda);
      reduced = compose(e, reduced);
      alpha = compose(e, alpha);
    }
    for (std::size_t cc = 0; cc < y.size(); ++cc) {
      if (cc == c || !col_live[cc] || is_zero(reduced(r, cc))) continue;
      const Rational lambda = -reduced(r, cc) / reduced(r, c);
      const auto f = Morphism::identity(p, y) + elementary(p, y, y, c, cc, lambda);
      reduced = compose(reduced, f);
      beta = compose(beta, f);
    }
    pairs.emplace_back(r, c, reduced(r, c));
    row_live[r] = false;
    col_live[c] = false;
  }

  // One part per nonzero entry or unmatched summand; remember which summand
  // of x (slot 0) and of y (slot d+1) each part carries.
  const std::size_t n = slots(p);
  std::vector<Angle> parts;
  std::vector<std::optional<std::size_t>> part_x;
  std::vector<std::optional<std::size_t>> part_y;
  for (const auto& [r, c, v] : pairs) {
    const Morphism piece = v * basis_mor(p, y[c], sx[r]);
    if (y[c] == sx[r]) {
      std::vector<SumObject> objects(n);
      objects[0] = SumObject(x[r]);
      objects[n - 1] = SumObject(y[c]);
      std::vector<Morphism> maps{Morphism::zero(p, objects[0], {})};
      for (std::size_t k = 1; k + 2 < n; ++k) maps.push_back(Morphism::zero(p, {}, {}));
      maps.push_back(Morphism::zero(p, {}, objects[n - 1]));
      maps.push_back(piece);
      parts.emplace_back(p, std::move(objects), std::move(maps));
    } else {
      parts.push_back(rotate_right(min_angle(piece)));
    }
    part_x.emplace_back(r);
    part_y.emplace_back(c);
  }
  for (std::size_t r = 0; r < sx.size(); ++r)
    if (row_live[r]) {
      parts.push_back(trivial_angle(p, SumObject(x[r])));
      part_x.emplace_back(r);
      part_y.emplace_back(std::nullopt);
    }
  for (std::size_t c = 0; c < y.size(); ++c)
    if (col_live[c]) {
      parts.push_back(rotate_left(rotate_left(trivial_angle(p, SumObject(shift(p, y[c], -1))))));
      part_x.emplace_back(std::nullopt);
      part_y.emplace_back(c);
    }
  if (parts.empty()) return zero_angle(p);

  const auto layout = sum_with_layout(p, parts);
  const Angle& summed = layout.angle;
  // Summed slot 0 / slot d+1 agree with x / y as multisets; match summands.
  std::vector<std::size_t> x_of(x.size());
  std::vector<std::size_t> y_of(y.size());
  for (std::size_t c = 0; c < parts.size(); ++c) {
    if (part_x[c]) x_of[layout.where[c][0][0]] = *part_x[c];
    if (part_y[c]) y_of[layout.where[c][n - 1][0]] = *part_y[c];
  }
  std::vector<std::size_t> x_back(x.size());
  for (std::size_t g = 0; g < x.size(); ++g) x_back[x_of[g]] = g;
  const Morphism to_x = permutation(p, summed.object(0), x, x_of);
  const Morphism from_x = permutation(p, x, summed.object(0), x_back);
  const Morphism to_y = permutation(p, summed.object(n - 1), y, y_of);

  std::vector<SumObject> objects = summed.objects();
  objects[0] = x;
  objects[n - 1] = y;
  std::vector<Morphism> maps = summed.maps();
  maps[0] = compose(maps[0], compose(from_x, shift(alpha, -1)));
  maps[n - 2] = compose(beta, compose(to_y, maps[n - 2]));
  maps[n - 1] = delta;
  assert(compose(shift(to_x, 1), summed.maps().back()) == compose(reduced, to_y));
  return Angle(p, std::move(objects), std::move(maps));
}

namespace {

Morphism checked_flevel_mu(const Morphism& mu, const char* what) {
  require_indecomposable_ends(mu, what);
  const auto& p = mu.params();
  const Position i = mu.source()[0].pos;
  const Position j = mu.target()[0].pos;
  if (i < 1 || j > p.period())
    throw DomainError(ErrorKind::BadDistance, std::string(what) + ": indices must lie in [1, period]");
  if (j - i < 1 || j - i > p.l() - 1 || is_zero(mu(0, 0)))
    throw DomainError(ErrorKind::BadDistance, std::string(what) + ": needs 1 <= j - i <= l - 1, got " +
                                                  std::to_string(j - i));
  return mu;
}

SumObject in_window(const FamilyParams& p, Position q) {
  if (q < 1 || q > p.period()) return {};
  return SumObject(IndecObject{q});
}

Morphism chain_map(const FamilyParams& p, const SumObject& a, const SumObject& b) {
  if (a.is_zero() || b.is_zero()) return Morphism::zero(p, a, b);
  return basis_mor(p, a[0], b[0]);
}

std::vector<Morphism> chain_maps(const FamilyParams& p, const std::vector<SumObject>& objects) {
  std::vector<Morphism> maps;
  for (std::size_t k = 0; k + 1 < objects.size(); ++k) maps.push_back(chain_map(p, objects[k], objects[k + 1]));
  return maps;
}

}  // namespace

FLevelChain d_kernel(const Morphism& mu) {
  checked_flevel_mu(mu, "d_kernel");
  const auto& p = mu.params();
  const Position i = mu.source()[0].pos;
  const Position j = mu.target()[0].pos;
  const int d = p.d();
  std::vector<SumObject> objects(static_cast<std::size_t>(d) + 1);
  // A^{d-2r} = f_{i - r l}, A^{d-2r-1} = f_{j - (r+1) l}.
  for (int k = d; k >= 0; --k) {
    const int back = d - k;
    const Position q = (back % 2 == 0) ? i - (back / 2) * p.l() : j - (back / 2 + 1) * p.l();
    objects[static_cast<std::size_t>(k)] = in_window(p, q);
  }
  auto maps = chain_maps(p, objects);
  return FLevelChain{ChainKind::Kernel, std::move(objects), std::move(maps), mu};
}

FLevelChain d_cokernel(const Morphism& mu) {
  checked_flevel_mu(mu, "d_cokernel");
  const auto& p = mu.params();
  const Position i = mu.source()[0].pos;
  const Position j = mu.target()[0].pos;
  const int d = p.d();
  std::vector<SumObject> objects(static_cast<std::size_t>(d) + 1);
  // A^{1+2r} = f_{j + r l}, A^{2+2r} = f_{i + (r+1) l}.
  for (int k = 0; k <= d; ++k) {
    const Position q = (k % 2 == 0) ? j + (k / 2) * p.l() : i + (k / 2 + 1) * p.l();
    objects[static_cast<std::size_t>(k)] = in_window(p, q);
  }
  auto maps = chain_maps(p, objects);
  return FLevelChain{ChainKind::Cokernel, std::move(objects), std::move(maps), mu};
}

FLevelChain d_exact_seq(const Morphism& mu) {
  checked_flevel_mu(mu, "d_exact_seq");
  const auto& p = mu.params();
  const Position i = mu.source()[0].pos;
  const Position j = mu.target()[0].pos;
  std::vector<SumObject> objects;
  const auto residue = [&](Position q) { return ((q % p.l()) + p.l()) % p.l(); };
  for (Position q = 1; q <= p.period(); ++q)
    if (residue(q) == residue(i) || residue(q) == residue(j)) objects.emplace_back(IndecObject{q});
  auto maps = chain_maps(p, objects);
  return FLevelChain{ChainKind::Exact, std::move(objects), std::move(maps), mu};
}

namespace {

// Restriction of f to the summands visible from t (covariant: Hom(t, -) is
// nonzero; contravariant: Hom(-, t) is nonzero). Rows index the target of f.
Matrix restrict(const FamilyParams& p, const Morphism& f, IndecObject t, Variance v) {
  auto visible = [&](IndecObject z) { return v == Variance::Covariant ? hom_dim(p, t, z) : hom_dim(p, z, t); };
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  for (std::size_t r = 0; r < f.target().size(); ++r)
    if (visible(f.target()[r])) rows.push_back(r);
  for (std::size_t c = 0; c < f.source().size(); ++c)
    if (visible(f.source()[c])) cols.push_back(c);
  Matrix m(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) m(a, b) = f(rows[a], cols[b]);
  return m;
}

std::size_t visible_dim(const FamilyParams& p, const SumObject& x, IndecObject t, Variance v) {
  std::size_t n = 0;
  for (auto z : x) n += static_cast<std::size_t>(v == Variance::Covariant ? hom_dim(p, t, z) : hom_dim(p, z, t));
  return n;
}

// maps[k]: objects[k] -> objects[k+1]; checks exactness at each k in [first, last].
void check_sequence(const FamilyParams& p, const std::vector<SumObject>& objects, const std::vector<Morphism>& maps,
                    std::size_t first, std::size_t last, Position t_lo, Position t_hi, Variance v,
                    ExactnessReport& report) {
  for (Position tp = t_lo; tp <= t_hi; ++tp) {
    const IndecObject t{tp};
    std::vector<Matrix> induced;
    induced.reserve(maps.size());
    for (const auto& f : maps) induced.push_back(restrict(p, f, t, v));
    for (std::size_t k = first; k <= last; ++k) {
      ++report.checks;
      const Matrix& in = induced[k - 1];
      const Matrix& out = induced[k];
      const std::size_t dim = visible_dim(p, objects[k], t, v);
      const std::size_t rin = rank(in);
      const std::size_t rout = rank(out);
      const bool nonzero = !(out * in).is_zero();
      if (nonzero || rin + rout != dim) {
        report.pass = false;
        report.failures.push_back(ExactnessFailure{v, tp, k, dim, rin, rout, nonzero});
      }
    }
  }
}

}  // namespace

ExactnessReport check_hom_exactness(const Angle& a) {
  const auto& p = a.params();
  ExactnessReport report;
  Position lo = 0;
  Position hi = 0;
  bool any = false;
  for (const auto& x : a.objects())
    for (auto z : x) {
      lo = any ? std::min(lo, z.pos) : z.pos;
      hi = any ? std::max(hi, z.pos) : z.pos;
      any = true;
    }
  if (!any) return report;

  std::vector<SumObject> objects;
  std::vector<Morphism> maps;
  for (int s = -1; s <= 1; ++s)
    for (std::size_t k = 0; k < a.length(); ++k) {
      objects.push_back(shift(p, a.object(k), s));
      maps.push_back(shift(a.map(k), s));
    }
  objects.push_back(shift(p, a.object(0), 2));

  const Position t_lo = lo - p.period() - p.l() + 1;
  const Position t_hi = hi + p.period();
  for (auto v : {Variance::Covariant, Variance::Contravariant})
    check_sequence(p, objects, maps, 1, objects.size() - 2, t_lo, t_hi, v, report);
  return report;
}

ExactnessReport check_flevel_exactness(const FLevelChain& chain) {
  const auto& p = chain.anchor.params();
  ExactnessReport report;
  const std::size_t n = chain.objects.size();
  auto zero_to = [&](const SumObject& x) { return Morphism::zero(p, {}, x); };
  auto to_zero = [&](const SumObject& x) { return Morphism::zero(p, x, {}); };

  switch (chain.kind) {
    case ChainKind::Kernel: {
      // 0 -> A^0 -> ... -> A^d -> A^{d+1}, exact at A^0..A^d under Hom(f_t, -).
      std::vector<SumObject> objs{SumObject{}};
      objs.insert(objs.end(), chain.objects.begin(), chain.objects.end());
      objs.push_back(chain.anchor.target());
      std::vector<Morphism> maps{zero_to(chain.objects.front())};
      maps.insert(maps.end(), chain.maps.begin(), chain.maps.end());
      maps.push_back(chain.anchor);
      check_sequence(p, objs, maps, 1, n, 1, p.period(), Variance::Covariant, report);
      break;
    }
    case ChainKind::Cokernel: {
      // A^0 -> A^1 -> ... -> A^{d+1} -> 0, exact at A^1..A^{d+1} under Hom(-, f_t).
      std::vector<SumObject> objs{chain.anchor.source()};
      objs.insert(objs.end(), chain.objects.begin(), chain.objects.end());
      objs.push_back(SumObject{});
      std::vector<Morphism> maps{chain.anchor};
      maps.insert(maps.end(), chain.maps.begin(), chain.maps.end());
      maps.push_back(to_zero(chain.objects.back()));
      check_sequence(p, objs, maps, 1, n, 1, p.period(), Variance::Contravariant, report);
      break;
    }
    case ChainKind::Exact: {
      std::vector<SumObject> objs{SumObject{}};
      objs.insert(objs.end(), chain.objects.begin(), chain.objects.end());
      objs.push_back(SumObject{});
      std::vector<Morphism> maps{zero_to(chain.objects.front())};
      maps.insert(maps.end(), chain.maps.begin(), chain.maps.end());
      maps.push_back(to_zero(chain.objects.back()));
      check_sequence(p, objs, maps, 1, n - 1, 1, p.period(), Variance::Covariant, report);
      check_sequence(p, objs, maps, 2, n, 1, p.period(), Variance::Contravariant, report);
      break;
    }
  }
  return report;
}

}  // namespace angcalc
