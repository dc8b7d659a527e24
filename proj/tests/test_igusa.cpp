#include "doctest.h"
#include "support.hpp"

#include "ellsub/elliptic_locus.hpp"
#include "ellsub/error.hpp"
#include "ellsub/exact/poly_data.hpp"
#include "ellsub/igusa.hpp"

using namespace ellsub;

namespace {

BinarySextic random_sextic(std::mt19937_64 &rng) {
  std::array<Rational, 7> a;
  for (auto &c : a)
    c = testing::random_rational(rng, 6, 3);
  if (a[6] == 0 && a[5] == 0)
    a[6] = 1;
  return BinarySextic::from_coeffs(a);
}

Matrix2 random_matrix(std::mt19937_64 &rng) {
  for (;;) {
    Matrix2 m{testing::random_rational(rng, 5, 3), testing::random_rational(rng, 5, 3),
              testing::random_rational(rng, 5, 3), testing::random_rational(rng, 5, 3)};
    if (m.det() != 0)
      return m;
  }
}

IgusaInvariants scaled(const IgusaInvariants &j, const Rational &l) {
  return {l * j.J2, pow(l, 2) * j.J4, pow(l, 3) * j.J6, pow(l, 5) * j.J10};
}

const BinarySextic x6_minus_1{{-1, 0, 0, 0, 0, 0, 1}};
const BinarySextic x5_minus_x{{0, -1, 0, 0, 0, 1, 0}};
const BinarySextic x6_minus_x{{0, -1, 0, 0, 0, 0, 1}};

} // namespace

TEST_CASE("invariants of the special sextics") {
  CHECK(igusa_invariants(x6_minus_1) == IgusaInvariants{240, 1620, 119880, 46656});
  CHECK(igusa_invariants(x5_minus_x) == IgusaInvariants{-40, -80, 320, -256});
  auto z10 = igusa_invariants(x6_minus_x);
  CHECK(z10.J2 == 0);
  CHECK(z10.J4 == 0);
  CHECK(z10.J6 == 0);
  CHECK(z10.J10 != 0);
  CHECK_THROWS_AS(igusa_invariants(BinarySextic{}), Error);
}

TEST_CASE("J10 is the discriminant, also when a6 = 0") {
  CHECK(binary_discriminant(x5_minus_x) == discriminant(UniPoly{0, -1, 0, 0, 0, 1}));
  // a6 = a5 = 0: two roots at infinity
  CHECK(binary_discriminant(BinarySextic{{1, 0, 0, 0, 1, 0, 0}}) == 0);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    UniPoly lin{testing::random_rational(rng), testing::random_nonzero(rng)};
    UniPoly q{testing::random_rational(rng), testing::random_rational(rng),
              testing::random_nonzero(rng)};
    UniPoly rest{testing::random_rational(rng), testing::random_nonzero(rng)};
    auto f = BinarySextic::from_poly(lin * lin * q * rest);
    CHECK(igusa_invariants(f).J10 == 0);
  }
}

TEST_CASE("transform examples") {
  const Matrix2 id{1, 0, 0, 1};
  CHECK(transform(x6_minus_1, id, 1) == x6_minus_1);
  const Matrix2 swap{0, 1, 1, 0};
  auto f = BinarySextic{{1, 2, 3, 4, 5, 6, 7}};
  auto g = transform(f, swap, 1);
  for (int i = 0; i <= 6; ++i)
    CHECK(g.a[i] == f.a[6 - i]);
  CHECK_THROWS_AS(transform(f, Matrix2{1, 2, 2, 4}, 1), Error);
  CHECK_THROWS_AS(transform(f, id, 0), Error);
}

TEST_CASE("covariance law") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 40; ++i) {
    auto f = random_sextic(rng);
    auto m = random_matrix(rng);
    Rational e = testing::random_nonzero(rng, 5, 3);
    auto before = igusa_invariants(f);
    auto after = igusa_invariants(transform(f, m, e));
    Rational w = pow(m.det(), 6) * pow(e, 4);
    CHECK(after.J2 == w * before.J2);
    CHECK(after.J4 == pow(w, 2) * before.J4);
    CHECK(after.J6 == pow(w, 3) * before.J6);
    CHECK(after.J10 == pow(w, 5) * before.J10);
  }
}

TEST_CASE("absolute invariants") {
  auto a = absolute_invariants({240, 1620, 119880, 46656});
  CHECK(a.i1 == Rational(9, 320));
  CHECK(a.i2 == Rational(27, 12800));
  CHECK(a.i3 == Rational(729) / (Rational(16384) * 759375));
  CHECK(absolute_invariants({640, -20480, -1310720, 268435456}).i1 == Rational(-1, 20));
  IgusaInvariants j{240, 1620, 119880, 46656};
  CHECK(absolute_invariants(scaled(j, 7)) == a);
  try {
    absolute_invariants({0, 1, 1, 1});
    FAIL("expected J2-zero");
  } catch (const Error &e) {
    CHECK(e.code() == Errc::j2_zero);
  }
}

TEST_CASE("moduli equality") {
  auto a = igusa_invariants(x5_minus_x);
  auto b = IgusaInvariants{640, -20480, -1310720, 268435456};
  CHECK(moduli_equal(a, b));
  CHECK_FALSE(moduli_equal(igusa_invariants(x6_minus_1), a));
  CHECK(moduli_equal(a, a));
  CHECK_THROWS_AS(moduli_equal(a, IgusaInvariants{1, 1, 1, 0}), Error);

  // scaling by a non-square or negative lambda is still the same point
  for (Rational l : {Rational(7), Rational(-3, 2), Rational(1, 5)})
    CHECK(moduli_equal(b, scaled(b, l)));

  // J2 = J4 = J6 = 0: only J10 remains and every such tuple is equal
  auto z10 = igusa_invariants(x6_minus_x);
  CHECK(moduli_equal(z10, IgusaInvariants{0, 0, 0, 5}));
  CHECK_FALSE(moduli_equal(z10, IgusaInvariants{0, 0, 1, 5}));

  std::mt19937_64 rng(12);
  for (int i = 0; i < 20; ++i) {
    auto f = random_sextic(rng);
    auto inv = igusa_invariants(f);
    if (inv.J10 == 0)
      continue;
    CHECK(moduli_equal(inv, igusa_invariants(transform(f, random_matrix(rng),
                                                       testing::random_nonzero(rng)))));
  }
}

TEST_CASE("J6 reconstruction reproduces the stored table") {
  auto r = reconstruct_j6();
  CHECK(r.invariant_dimension == 3);
  CHECK(r.monomials == 58);
  CHECK(r.j6 == data::table(data::Table::j6));
  // every complete printed monomial agrees except the two merged mirror pairs
  const auto &printed = data::table(data::Table::j6_printed);
  int mismatches = 0;
  for (const auto &[e, c] : printed.terms())
    if (r.j6.coeff(e) != c)
      ++mismatches;
  CHECK(mismatches == 2);
  CHECK(r.j6.coeff({1, 0, 3, 0, 0, 0, 2}) == -96);
  CHECK(r.j6.coeff({0, 0, 4, 0, 1, 0, 1}) == -160);
}

TEST_CASE("sextic text form") {
  auto f = parse_sextic("-1 0 0 0 0 0 1");
  CHECK(f == x6_minus_1);
  CHECK(parse_sextic(to_string(f)) == f);
  CHECK_THROWS_AS(parse_sextic("1 2 3"), Error);
  CHECK_THROWS_AS(parse_sextic("0 0 0 0 0 0 0"), Error);
}
