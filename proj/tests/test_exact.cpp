#include "doctest.h"
#include "support.hpp"

#include "ellsub/error.hpp"
#include "ellsub/exact/linalg.hpp"
#include "ellsub/exact/mpoly.hpp"
#include "ellsub/exact/poly_data.hpp"
#include "ellsub/exact/quad_ring.hpp"
#include "ellsub/exact/upoly.hpp"

#include <array>

using namespace ellsub;

namespace {

UniPoly random_poly(std::mt19937_64 &rng, int degree) {
  std::vector<Rational> c;
  for (int i = 0; i < degree; ++i)
    c.push_back(testing::random_rational(rng, 9, 4));
  c.push_back(testing::random_nonzero(rng, 9, 4));
  return UniPoly(c);
}

bool is_canonical(const Rational &q) {
  Rational copy = q;
  copy.canonicalize();
  return copy.get_num() == q.get_num() && copy.get_den() == q.get_den() &&
         q.get_den() > 0;
}

} // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(parse_rational("10/5")) == "2");
  CHECK(parse_rational("+7") == 7);
  CHECK(to_string(Rational(0)) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));

  Rational r;
  CHECK(rational_sqrt(Rational(49, 4), r));
  CHECK(r == Rational(7, 2));
  CHECK_FALSE(rational_sqrt(Rational(2), r));
  CHECK_FALSE(rational_sqrt(Rational(-4), r));
}

TEST_CASE("rational field laws stay exact and canonical") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Rational a = testing::random_rational(rng), b = testing::random_rational(rng),
             c = testing::random_rational(rng);
    Rational s1 = (a + b) + c, s2 = a + (b + c);
    Rational d1 = a * (b + c), d2 = a * b + a * c;
    CHECK(s1 == s2);
    CHECK(d1 == d2);
    CHECK(is_canonical(s1));
    CHECK(is_canonical(d2));
  }
}

TEST_CASE("resultant examples") {
  CHECK(resultant(UniPoly{-1, 0, 1}, UniPoly{-4, 0, 1}) == 9);
  CHECK(discriminant(UniPoly{0, -1, 0, 0, 0, 1}) == -256);
  CHECK(discriminant(UniPoly{-1, 0, 0, 0, 0, 0, 1}) == 46656);
  CHECK_THROWS_AS(resultant(UniPoly{}, UniPoly{1, 1}), Error);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    Rational a = testing::random_rational(rng);
    UniPoly g = random_poly(rng, static_cast<int>(rng() % 5));
    CHECK(resultant(UniPoly{-a, 1}, g) == g(a));
  }
}

TEST_CASE("resultant is multiplicative in the second argument") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    UniPoly f = random_poly(rng, 1 + static_cast<int>(rng() % 3));
    UniPoly g = random_poly(rng, static_cast<int>(rng() % 4));
    UniPoly h = random_poly(rng, static_cast<int>(rng() % 4));
    CHECK(resultant(f, g) * resultant(f, h) == resultant(f, g * h));
  }
}

TEST_CASE("discriminant detects repeated roots") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 30; ++i) {
    UniPoly sq = random_poly(rng, 1);
    UniPoly rest = random_poly(rng, 1 + static_cast<int>(rng() % 3));
    CHECK(discriminant(sq * sq * rest) == 0);
  }
}

TEST_CASE("rational roots") {
  CHECK(rational_roots(UniPoly{-1, 0, 1}) == std::vector<Rational>{-1, 1});
  CHECK(rational_roots(UniPoly{-2, 0, 0, 1}).empty());
  CHECK(rational_roots(UniPoly{1, -5, 6}) ==
        std::vector<Rational>{Rational(1, 3), Rational(1, 2)});
  // repeated and zero roots are listed once
  UniPoly p = UniPoly{0, 1} * UniPoly{0, 1} * UniPoly{Rational(-7, 3), 1} *
              UniPoly{Rational(-7, 3), 1} * UniPoly{5, 1};
  CHECK(rational_roots(p) == std::vector<Rational>{-5, 0, Rational(7, 3)});
  CHECK(rational_roots(UniPoly{Rational(1, 2)}).empty());
  CHECK_THROWS_AS(rational_roots(UniPoly{}), Error);

  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; ++i) {
    std::vector<Rational> roots;
    UniPoly prod{testing::random_nonzero(rng)};
    for (int k = 0; k < 3; ++k) {
      roots.push_back(testing::random_rational(rng, 200, 30));
      prod *= UniPoly{-roots.back(), 1};
    }
    prod *= UniPoly{1, 0, 1}; // x^2 + 1 contributes nothing
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    CHECK(rational_roots(prod) == roots);
  }
}

TEST_CASE("quad_reduce examples") {
  auto r = quad_reduce(UniPoly{0, 0, 1}, 0, -1);
  CHECK(r.c0 == 1);
  CHECK(r.c1 == 0);
  r = quad_reduce(UniPoly{0, 0, 0, 1}, 1, 1);
  CHECK(r.c0 == -1);
  CHECK(r.c1 == 0);
  r = quad_reduce(UniPoly{5}, 3, Rational(2, 7));
  CHECK(r.c0 == 5);
  CHECK(r.c1 == 0);
}

TEST_CASE("quad_reduce is a ring homomorphism") {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 50; ++i) {
    Rational e1 = testing::random_rational(rng), e2 = testing::random_rational(rng);
    UniPoly p = random_poly(rng, static_cast<int>(rng() % 6));
    UniPoly q = random_poly(rng, static_cast<int>(rng() % 6));
    CHECK(quad_reduce(p * q, e1, e2) == quad_reduce(p, e1, e2) * quad_reduce(q, e1, e2));
    CHECK(quad_reduce(p + q, e1, e2) == quad_reduce(p, e1, e2) + quad_reduce(q, e1, e2));
  }
}

TEST_CASE("poly table text format") {
  auto t = MultiPolyTable::parse("# comment\n# variables: x y\n2 0 : 3\n0 1 : -1/2  # trailing\n");
  CHECK(t.nvars() == 2);
  CHECK(t.size() == 2);
  CHECK(t.coeff({2, 0}) == 3);
  const std::array<Rational, 2> pt{2, 4};
  CHECK(t(pt) == 10);
  CHECK(MultiPolyTable::parse(t.serialize()) == t);

  CHECK_THROWS_AS(MultiPolyTable::parse("1 2 : 3\n1 : 4\n"), Error);
  CHECK_THROWS_AS(MultiPolyTable::parse("1 2 3\n"), Error);
  CHECK_THROWS_AS(MultiPolyTable::parse("1 x : 3\n"), Error);

  t.add_term({2, 0}, -3);
  CHECK(t.size() == 1);
}

TEST_CASE("compiled tables are weighted homogeneous") {
  const std::array<int, 4> jw{1, 2, 3, 5};
  CHECK(data::table(data::Table::l2).is_weighted_homogeneous(jw));
  CHECK(data::table(data::Table::l2).weighted_degree(jw) == 15);
  CHECK(data::table(data::Table::l2_printed).is_weighted_homogeneous(jw));
  const std::array<int, 7> index{0, 1, 2, 3, 4, 5, 6};
  const std::array<int, 7> ones{1, 1, 1, 1, 1, 1, 1};
  CHECK(data::table(data::Table::j6).weighted_degree(ones) == 6);
  CHECK(data::table(data::Table::j6).weighted_degree(index) == 18);
  CHECK(data::table(data::Table::j6).is_weighted_homogeneous(index));
  CHECK(data::table(data::Table::j4).weighted_degree(index) == 12);
  CHECK(data::table(data::Table::l2).size() == 34);
  CHECK(data::table(data::Table::j6).size() == 56);
}

TEST_CASE("linear algebra") {
  Matrix m{{1, 2, 3}, {2, 4, 6}};
  auto ns = nullspace(m, 3);
  CHECK(ns.size() == 2);
  for (const auto &v : ns)
    CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
  auto x = solve_unique({{2, 1}, {1, -1}}, {3, 0}, 2);
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  CHECK_FALSE(solve_unique({{1, 1}}, {1}, 2));
}
