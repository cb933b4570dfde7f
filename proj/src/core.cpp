#include "angcalc/core.hpp"

#include <algorithm>
#include <string>

namespace angcalc {

FamilyParams validate_params(int d, int l, int m) {
  auto fail = [](const std::string& why) { throw DomainError(ErrorKind::ConstraintViolation, why); };
  if (d < 2) fail("d must be at least 2 (got " + std::to_string(d) + ")");
  if (d % 2 != 0) fail("d must be even (got " + std::to_string(d) + ")");
  if (l < 2) fail("l must be at least 2 (got " + std::to_string(l) + ")");
  if (m < 3) fail("m must be at least 3 (got " + std::to_string(m) + ")");
  if (2 * (m - 1) != d * l)
    fail("m - 1 must equal d*l/2 (got m - 1 = " + std::to_string(m - 1) +
         ", d*l/2 = " + std::to_string(d * l / 2) + ")");
  FamilyParams p(d, l, m);
  // Follows from the constraint; a failure here means the arithmetic above is wrong.
  if (2 * p.period() != l * (d + 2)) fail("period != l*(d+2)/2");
  return p;
}

IndecObject make_object(const FamilyParams& p, std::int64_t shift, int index) {
  if (index < 1 || index > p.period())
    throw DomainError(ErrorKind::ParseError,
                      "index " + std::to_string(index) + " outside [1, " + std::to_string(p.period()) + "]");
  return IndecObject{shift * p.period() + index};
}

std::int64_t shift_of(const FamilyParams& p, IndecObject x) {
  const std::int64_t n = p.period();
  const std::int64_t q = x.pos - 1;
  return (q >= 0 ? q / n : -((-q + n - 1) / n));
}

int index_of(const FamilyParams& p, IndecObject x) {
  return static_cast<int>(x.pos - shift_of(p, x) * p.period());
}

SumObject::SumObject(std::vector<IndecObject> summands) : summands_(std::move(summands)) {
  std::sort(summands_.begin(), summands_.end());
}

SumObject::SumObject(std::initializer_list<IndecObject> summands)
    : SumObject(std::vector<IndecObject>(summands)) {}

namespace {

// Stable merge of two sorted summand lists; reports where each input summand lands.
struct Merge {
  SumObject merged;
  std::vector<std::size_t> from_a;
  std::vector<std::size_t> from_b;
};

Merge merge(const SumObject& a, const SumObject& b) {
  Merge out;
  std::vector<IndecObject> all;
  all.reserve(a.size() + b.size());
  out.from_a.resize(a.size());
  out.from_b.resize(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] <= b[j])) {
      out.from_a[i] = all.size();
      all.push_back(a[i++]);
    } else {
      out.from_b[j] = all.size();
      all.push_back(b[j++]);
    }
  }
  out.merged = SumObject(std::move(all));
  return out;
}

std::vector<Rational> flatten(const Matrix& m) {
  std::vector<Rational> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

}  // namespace

SumObject operator+(const SumObject& a, const SumObject& b) { return merge(a, b).merged; }

int hom_dim(const FamilyParams& p, IndecObject x, IndecObject y) {
  const auto delta = y.pos - x.pos;
  return (delta >= 0 && delta <= p.l() - 1) ? 1 : 0;
}

Morphism::Morphism(const FamilyParams& p, SumObject source, SumObject target, Matrix entries)
    : params_(p), source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
  if (entries_.rows() != target_.size() || entries_.cols() != source_.size())
    throw DomainError(ErrorKind::ShapeMismatch,
                      "matrix is " + std::to_string(entries_.rows()) + "x" + std::to_string(entries_.cols()) +
                          ", expected " + std::to_string(target_.size()) + "x" + std::to_string(source_.size()));
  for (std::size_t t = 0; t < target_.size(); ++t)
    for (std::size_t s = 0; s < source_.size(); ++s)
      if (!angcalc::is_zero(entries_(t, s)) && hom_dim(p, source_[s], target_[t]) == 0)
        throw DomainError(ErrorKind::SupportViolation,
                          "nonzero entry from position " + std::to_string(source_[s].pos) + " to position " +
                              std::to_string(target_[t].pos) + " where Hom vanishes");
}

Morphism Morphism::zero(const FamilyParams& p, SumObject source, SumObject target) {
  Matrix m(target.size(), source.size());
  return Morphism(p, std::move(source), std::move(target), std::move(m));
}

Morphism Morphism::identity(const FamilyParams& p, SumObject object) {
  auto m = Matrix::identity(object.size());
  return Morphism(p, object, object, std::move(m));
}

Morphism basis_mor(const FamilyParams& p, IndecObject x, IndecObject y) {
  if (hom_dim(p, x, y) == 0)
    throw DomainError(ErrorKind::ZeroHom, "Hom from position " + std::to_string(x.pos) + " to position " +
                                              std::to_string(y.pos) + " is zero");
  Matrix m(1, 1);
  m(0, 0) = 1;
  return Morphism(p, SumObject(x), SumObject(y), std::move(m));
}

Morphism elementary(const FamilyParams& p, const SumObject& source, const SumObject& target, std::size_t t,
                    std::size_t s, const Rational& value) {
  Matrix m(target.size(), source.size());
  m(t, s) = value;
  return Morphism(p, source, target, std::move(m));
}

std::vector<std::pair<std::size_t, std::size_t>> hom_support(const FamilyParams& p, const SumObject& source,
                                                             const SumObject& target) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t t = 0; t < target.size(); ++t)
    for (std::size_t s = 0; s < source.size(); ++s)
      if (hom_dim(p, source[s], target[t]) == 1) out.emplace_back(t, s);
  return out;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.target() == g.source()) || !(f.params() == g.params()))
    throw DomainError(ErrorKind::ShapeMismatch, "compose: target of f differs from source of g");
  const auto& p = f.params();
  const auto& src = f.source();
  const auto& dst = g.target();
  Matrix m(dst.size(), src.size());
  for (std::size_t z = 0; z < dst.size(); ++z)
    for (std::size_t x = 0; x < src.size(); ++x) {
      // u_{y->z} u_{x->y} = u_{x->z} if the total distance stays below l, else 0.
      if (hom_dim(p, src[x], dst[z]) == 0) continue;
      Rational acc = 0;
      for (std::size_t y = 0; y < f.target().size(); ++y) acc += g(z, y) * f(y, x);
      m(z, x) = acc;
    }
  return Morphism(p, src, dst, std::move(m));
}

Morphism operator+(const Morphism& a, const Morphism& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target()))
    throw DomainError(ErrorKind::ShapeMismatch, "sum of morphisms with different source or target");
  Matrix m = a.entries();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) += b(r, c);
  return Morphism(a.params(), a.source(), a.target(), std::move(m));
}

Morphism operator*(const Rational& c, const Morphism& f) {
  Matrix m = f.entries();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t s = 0; s < m.cols(); ++s) m(r, s) *= c;
  return Morphism(f.params(), f.source(), f.target(), std::move(m));
}

Morphism direct_sum(const Morphism& a, const Morphism& b) {
  const auto src = merge(a.source(), b.source());
  const auto dst = merge(a.target(), b.target());
  Matrix m(dst.merged.size(), src.merged.size());
  for (std::size_t t = 0; t < a.target().size(); ++t)
    for (std::size_t s = 0; s < a.source().size(); ++s) m(dst.from_a[t], src.from_a[s]) = a(t, s);
  for (std::size_t t = 0; t < b.target().size(); ++t)
    for (std::size_t s = 0; s < b.source().size(); ++s) m(dst.from_b[t], src.from_b[s]) = b(t, s);
  return Morphism(a.params(), src.merged, dst.merged, std::move(m));
}

IndecObject shift(const FamilyParams& p, IndecObject x, std::int64_t r) {
  return IndecObject{x.pos + r * p.period()};
}

SumObject shift(const FamilyParams& p, const SumObject& x, std::int64_t r) {
  std::vector<IndecObject> out;
  out.reserve(x.size());
  for (auto y : x) out.push_back(shift(p, y, r));
  return SumObject(std::move(out));
}

Morphism shift(const Morphism& f, std::int64_t r) {
  const auto& p = f.params();
  return Morphism(p, shift(p, f.source(), r), shift(p, f.target(), r), f.entries());
}

bool is_radical(const Morphism& f) {
  for (std::size_t t = 0; t < f.target().size(); ++t)
    for (std::size_t s = 0; s < f.source().size(); ++s)
      if (f.target()[t] == f.source()[s] && !is_zero(f(t, s))) return false;
  return true;
}

std::optional<Morphism> factor_right(const Morphism& through, const Morphism& target) {
  if (!(through.target() == target.target()))
    throw DomainError(ErrorKind::ShapeMismatch, "factor_right: targets differ");
  const auto& p = through.params();
  const SumObject& from = target.source();
  const SumObject& mid = through.source();
  const auto unknowns = hom_support(p, from, mid);

  const std::size_t eqs = target.target().size() * from.size();
  Matrix a(eqs, unknowns.size());
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    const auto img = compose(through, elementary(p, from, mid, unknowns[k].first, unknowns[k].second, 1));
    const auto col = flatten(img.entries());
    for (std::size_t e = 0; e < eqs; ++e) a(e, k) = col[e];
  }
  const auto x = solve(a, flatten(target.entries()));
  if (!x) return std::nullopt;
  Matrix h(mid.size(), from.size());
  for (std::size_t k = 0; k < unknowns.size(); ++k) h(unknowns[k].first, unknowns[k].second) = (*x)[k];
  return Morphism(p, from, mid, std::move(h));
}

std::optional<Morphism> factor_left(const Morphism& through, const Morphism& target) {
  if (!(through.source() == target.source()))
    throw DomainError(ErrorKind::ShapeMismatch, "factor_left: sources differ");
  const auto& p = through.params();
  const SumObject& mid = through.target();
  const SumObject& to = target.target();
  const auto unknowns = hom_support(p, mid, to);

  const std::size_t eqs = to.size() * target.source().size();
  Matrix a(eqs, unknowns.size());
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    const auto img = compose(elementary(p, mid, to, unknowns[k].first, unknowns[k].second, 1), through);
    const auto col = flatten(img.entries());
    for (std::size_t e = 0; e < eqs; ++e) a(e, k) = col[e];
  }
  const auto x = solve(a, flatten(target.entries()));
  if (!x) return std::nullopt;
  Matrix h(to.size(), mid.size());
  for (std::size_t k = 0; k < unknowns.size(); ++k) h(unknowns[k].first, unknowns[k].second) = (*x)[k];
  return Morphism(p, mid, to, std::move(h));
}

bool is_split_epi(const Morphism& f) {
  return factor_right(f, Morphism::identity(f.params(), f.target())).has_value();
}

bool is_split_mono(const Morphism& f) {
  return factor_left(f, Morphism::identity(f.params(), f.source())).has_value();
}

// Ordering summands by position makes f block-triangular with scalar blocks
// between equal positions; f is invertible iff the multisets agree and every
// such diagonal block is.
bool is_iso(const Morphism& f) {
  if (!(f.source() == f.target())) return false;
  const auto& obj = f.source();
  std::size_t start = 0;
  while (start < obj.size()) {
    std::size_t end = start;
    while (end < obj.size() && obj[end] == obj[start]) ++end;
    const std::size_t n = end - start;
    Matrix block(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) block(i, j) = f(start + i, start + j);
    if (rank(block) != n) return false;
    start = end;
  }
  return true;
}

}  // namespace angcalc
