#include <doctest.h>

#include "support.hpp"

using namespace angcalc;
using ts::at;

TEST_CASE("params validation") {
  CHECK(validate_params(4, 4, 9).period() == 12);
  CHECK(validate_params(2, 2, 3).period() == 4);
  CHECK(validate_params(2, 3, 4).period() == 6);
  auto kind_of = [](int d, int l, int m) {
    try {
      validate_params(d, l, m);
    } catch (const DomainError& e) {
      return e.kind();
    }
    return ErrorKind::ParseError;
  };
  CHECK(kind_of(3, 2, 4) == ErrorKind::ConstraintViolation);
  CHECK(kind_of(4, 4, 8) == ErrorKind::ConstraintViolation);
  CHECK(kind_of(0, 2, 1) == ErrorKind::ConstraintViolation);
  CHECK(kind_of(2, 1, 2) == ErrorKind::ConstraintViolation);
}

TEST_CASE("object encoding") {
  const auto p = ts::p449();
  CHECK(make_object(p, 0, 1).pos == 1);
  CHECK(make_object(p, -1, 4).pos == -8);
  CHECK(make_object(p, 1, 2).pos == 14);
  for (Position q = -30; q <= 30; ++q) {
    const IndecObject x{q};
    CHECK(make_object(p, shift_of(p, x), index_of(p, x)) == x);
    CHECK(index_of(p, x) >= 1);
    CHECK(index_of(p, x) <= 12);
  }
  CHECK(shift(p, at(1), 1).pos == 13);
  CHECK(shift(p, shift(p, at(7), 1), -1) == at(7));
}

TEST_CASE("hom_dim examples") {
  const auto p = ts::p449();
  CHECK(hom_dim(p, at(1), at(4)) == 1);
  CHECK(hom_dim(p, at(5), at(5)) == 1);
  CHECK(hom_dim(p, at(12), make_object(p, 1, 2)) == 1);
  CHECK(hom_dim(p, at(1), at(5)) == 0);
  CHECK(hom_dim(p, at(4), at(1)) == 0);
}

TEST_CASE("hom_dim agrees with the path oracle") {
  for (const auto& p : ts::triples())
    for (Position x = -15; x <= 15; ++x)
      for (Position y = x - 3; y <= x + p.l() + 3; ++y) {
        CAPTURE(x);
        CAPTURE(y);
        CHECK(hom_dim(p, at(x), at(y)) == ts::path_count(p, x, y));
      }
}

TEST_CASE("hom_dim is shift-equivariant") {
  ts::Gen g(11);
  for (const auto& p : ts::triples())
    for (int n = 0; n < 200; ++n) {
      const auto x = at(g.uniform(-20, 20)), y = at(g.uniform(-20, 20));
      const auto r = g.uniform(-3, 3);
      CHECK(hom_dim(p, x, y) == hom_dim(p, shift(p, x, r), shift(p, y, r)));
    }
}

TEST_CASE("basis morphisms") {
  const auto p = ts::p449();
  const auto u = basis_mor(p, at(1), at(2));
  CHECK(u(0, 0) == Rational(1));
  CHECK_THROWS_AS(basis_mor(p, at(1), at(5)), DomainError);
  try {
    basis_mor(p, at(1), at(5));
  } catch (const DomainError& e) {
    CHECK(e.kind() == ErrorKind::ZeroHom);
  }
  const auto v = basis_mor(p, make_object(p, -1, 12), at(1));
  CHECK(v(0, 0) == Rational(1));
}

TEST_CASE("morphism construction rejects bad shape and support") {
  const auto p = ts::p449();
  Matrix bad(2, 1);
  CHECK_THROWS_AS(Morphism(p, SumObject(at(1)), SumObject(at(2)), bad), DomainError);
  Matrix m(1, 1);
  m(0, 0) = 1;
  try {
    Morphism(p, SumObject(at(1)), SumObject(at(9)), m);
    FAIL("expected SupportViolation");
  } catch (const DomainError& e) {
    CHECK(e.kind() == ErrorKind::SupportViolation);
  }
}

TEST_CASE("composition examples") {
  const auto p = ts::p449();
  CHECK(compose(basis_mor(p, at(2), at(3)), basis_mor(p, at(1), at(2))) == basis_mor(p, at(1), at(3)));
  CHECK(compose(basis_mor(p, at(4), at(5)), basis_mor(p, at(1), at(4))).is_zero());
  const auto f = basis_mor(p, at(3), at(5));
  CHECK(compose(Morphism::identity(p, f.target()), f) == f);
  CHECK(compose(f, Morphism::identity(p, f.source())) == f);
}

TEST_CASE("composition agrees with path concatenation") {
  for (const auto& p : ts::triples())
    for (Position x = 0; x <= 6; ++x)
      for (Position y = x; y < x + p.l(); ++y)
        for (Position z = y; z < y + p.l(); ++z) {
          const auto g = compose(basis_mor(p, at(y), at(z)), basis_mor(p, at(x), at(y)));
          CHECK(g.is_zero() == (ts::path_count(p, x, z) == 0));
          if (!g.is_zero()) CHECK(g == basis_mor(p, at(x), at(z)));
        }
}

TEST_CASE("composition is associative and bilinear on random sums") {
  ts::Gen g(2024);
  for (const auto& p : ts::triples())
    for (int n = 0; n < 60; ++n) {
      const auto a = g.sum(0, 8, 3), b = g.sum(0, 8, 3), c = g.sum(0, 8, 3), d = g.sum(0, 8, 3);
      const auto f = g.mor(p, a, b), h = g.mor(p, b, c), k = g.mor(p, c, d);
      CHECK(compose(k, compose(h, f)) == compose(compose(k, h), f));
      const auto f2 = g.mor(p, a, b);
      CHECK(compose(h, f + f2) == compose(h, f) + compose(h, f2));
      CHECK(compose(h, Rational(3) * f) == Rational(3) * compose(h, f));
    }
}

TEST_CASE("shift of morphisms") {
  const auto p = ts::p449();
  CHECK(shift(basis_mor(p, at(4), at(5)), -1) == basis_mor(p, make_object(p, -1, 4), make_object(p, -1, 5)));
  ts::Gen g(5);
  for (int n = 0; n < 50; ++n) {
    const auto a = g.sum(-5, 5, 3), b = g.sum(-5, 5, 3), c = g.sum(-5, 5, 3);
    const auto f = g.mor(p, a, b), h = g.mor(p, b, c);
    CHECK(shift(compose(h, f), 2) == compose(shift(h, 2), shift(f, 2)));
    CHECK(shift(shift(f, 1), -1) == f);
  }
}

TEST_CASE("sum objects stay sorted") {
  const SumObject s{at(5), at(1), at(3)};
  CHECK(s[0] == at(1));
  CHECK(s[2] == at(5));
  CHECK((SumObject(at(4)) + SumObject{at(2), at(6)}).size() == 3);
}

TEST_CASE("radical examples") {
  const auto p = ts::p449();
  CHECK(is_radical(basis_mor(p, at(1), at(2))));
  CHECK_FALSE(is_radical(Morphism::identity(p, SumObject(at(1)))));
  Matrix m(2, 2);
  m(1, 1) = 1;
  const SumObject x{at(1), at(1)};
  CHECK_FALSE(is_radical(Morphism(p, x, x, m)));
}

TEST_CASE("split and iso examples") {
  const auto p = ts::p449();
  const auto id = Morphism::identity(p, SumObject(at(3)));
  CHECK(is_split_epi(id));
  CHECK(is_split_mono(id));
  CHECK(is_iso(id));
  const auto u = basis_mor(p, at(1), at(2));
  CHECK_FALSE(is_split_epi(u));
  CHECK_FALSE(is_split_mono(u));
  CHECK_FALSE(is_iso(u));
  Matrix m(1, 2);
  m(0, 0) = 1;
  const Morphism proj(p, SumObject{at(1), at(2)}, SumObject(at(1)), m);
  CHECK(is_split_epi(proj));
  CHECK_FALSE(is_split_mono(proj));
  CHECK_FALSE(is_iso(proj));
}

TEST_CASE("split epi and split mono together iff iso (random small sums)") {
  ts::Gen g(77);
  const auto p = ts::p449();
  for (int n = 0; n < 300; ++n) {
    const auto a = g.sum(0, 5, 2), b = g.sum(0, 5, 2);
    const auto f = g.mor(p, a, b);
    CHECK((is_split_epi(f) && is_split_mono(f)) == is_iso(f));
  }
}

TEST_CASE("endomorphism rings of indecomposables are local") {
  const auto p = ts::p449();
  for (int c : {-2, -1, 0, 1, 3}) {
    const auto f = Rational(c) * Morphism::identity(p, SumObject(at(6)));
    CHECK(is_iso(f) == (c != 0));
  }
}

TEST_CASE("factorization") {
  const auto p = ts::p449();
  const auto u12 = basis_mor(p, at(1), at(2)), u23 = basis_mor(p, at(2), at(3)), u13 = basis_mor(p, at(1), at(3));
  const auto h = factor_right(u23, u13);
  REQUIRE(h.has_value());
  CHECK(compose(u23, *h) == u13);
  const auto k = factor_left(u12, u13);
  REQUIRE(k.has_value());
  CHECK(compose(*k, u12) == u13);
  CHECK_FALSE(factor_right(basis_mor(p, at(3), at(4)), Morphism::identity(p, SumObject(at(4)))).has_value());
  CHECK_FALSE(factor_left(basis_mor(p, at(3), at(4)), Morphism::identity(p, SumObject(at(3)))).has_value());
}
