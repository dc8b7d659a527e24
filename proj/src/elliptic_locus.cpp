#include "ellsub/elliptic_locus.hpp"

#include "ellsub/error.hpp"
#include "ellsub/exact/linalg.hpp"
#include "ellsub/exact/poly_data.hpp"
#include "ellsub/exact/quad_ring.hpp"

#include <algorithm>
#include <random>

namespace ellsub {

Rational delta(const UVPoint &p) {
  return p.u * p.u - 4 * p.v + 18 * p.u - 27;
}

void require_nondegenerate(const UVPoint &p) {
  if (delta(p) == 0)
    fail(Errc::degenerate, "degenerate sextic: Delta(" + to_string(p) + ") = 0");
}

std::string to_string(const UVPoint &p) {
  return to_string(p.u) + ", " + to_string(p.v);
}

UVPoint uv_from_s(const Rational &s1, const Rational &s2, const Rational &s3) {
  if (s3 == 0)
    fail(Errc::domain, "s3 = 0");
  UVPoint p{s1 * s2 / s3, (s1 * s1 * s1 * s3 + s2 * s2 * s2) / (s3 * s3)};
  require_nondegenerate(p);
  return p;
}

BinarySextic sextic_from_s(const Rational &s1, const Rational &s2) {
  BinarySextic f{{-1, 0, s2, 0, -s1, 0, 1}};
  if (binary_discriminant(f) == 0)
    fail(Errc::degenerate, "degenerate sextic: X^6 - s1 X^4 + s2 X^2 - 1 has a repeated root");
  return f;
}

IgusaInvariants igusa_from_uv(const UVPoint &p) {
  require_nondegenerate(p);
  const Rational &u = p.u, &v = p.v;
  IgusaInvariants inv;
  inv.J2 = 240 + 16 * u;
  inv.J4 = 48 * v + 4 * u * u + 1620 - 504 * u;
  inv.J6 = -20664 * u + 96 * v - 424 * u * u + 24 * u * u * u + 160 * u * v + 119880;
  Rational d = 27 - 18 * u - u * u + 4 * v;
  inv.J10 = 64 * d * d;
  return inv;
}

JPair jpair_from_uv(const UVPoint &p) {
  require_nondegenerate(p);
  const Rational &u = p.u, &v = p.v;
  Rational d = delta(p);
  Rational n1 = v * v - 2 * u * u * u + 54 * u * u - 9 * u * v - 27 * v;
  Rational n2 = u * u + 9 * u - 3 * v;
  JPair jp;
  jp.e1 = 256 * n1 / d;
  jp.e2 = 65536 * n2 * n2 * n2 / (d * d);
  Rational disc = jp.e1 * jp.e1 - 4 * jp.e2, root;
  if (rational_sqrt(disc, root))
    jp.split = std::make_pair(Rational((jp.e1 - root) / 2),
                              Rational((jp.e1 + root) / 2));
  return jp;
}

Rational jpair_discriminant(const UVPoint &p) {
  JPair jp = jpair_from_uv(p);
  return jp.e1 * jp.e1 - 4 * jp.e2;
}

UVPoint equal_j_family(const Rational &j) {
  if (j == 0)
    fail(Errc::degenerate, "j = 0 gives the degenerate point (9, 54)");
  Rational t = j / 256;
  return UVPoint{9 - t, 9 * (6 - t)};
}

IgusaInvariants m1_embedding(const Rational &j) {
  if (j == 0)
    fail(Errc::domain, "j = 0 is outside the embedding");
  IgusaInvariants inv;
  Rational j2 = j * j;
  inv.J2 = 384 - j / 16;
  inv.J4 = j2 / 16384;
  inv.J6 = j2 * (53248 - 3 * j) / 2097152;
  inv.J10 = j2 * j2 / 67108864;
  return inv;
}

Rational l2_equation(const IgusaInvariants &inv) {
  const std::array<Rational, 4> point{inv.J2, inv.J4, inv.J6, inv.J10};
  return data::table(data::Table::l2)(point);
}

UniPoly inversion_cubic(const AbsoluteInvariants &abs) {
  const Rational &i1 = abs.i1, &i2 = abs.i2;
  return UniPoly{432000 * i2 - 421200 * i1 + 10935,
                 86400 * i2 - 66960 * i1 - 2349,
                 5760 * i2 + 117 - 3312 * i1,
                 128 * i2 - 48 * i1 + 1};
}

std::vector<UVPoint> uv_from_igusa(const IgusaInvariants &inv) {
  if (inv.J10 == 0)
    fail(Errc::domain, "J10 = 0: not a genus-2 curve");
  if (l2_equation(inv) != 0)
    fail(Errc::not_on_locus, "invariants do not satisfy the locus equation");
  if (inv.J2 == 0)
    fail(Errc::inversion_singular, "inversion-singular: J2 = 0");

  AbsoluteInvariants abs = absolute_invariants(inv);
  UniPoly cubic = inversion_cubic(abs);
  if (cubic.is_zero())
    fail(Errc::inversion_singular, "inversion-singular: the cubic in u vanishes identically");

  std::vector<UVPoint> found;
  bool any_regular_root = false;
  for (const Rational &u : rational_roots(cubic)) {
    if (u == -15)
      continue;
    any_regular_root = true;
    Rational w = 15 + u;
    // i1 = (12v + u^2 + 405 - 126u) / (64 (15 + u)^2), linear in v
    Rational v = (64 * abs.i1 * w * w - u * u - 405 + 126 * u) / 12;
    UVPoint p{u, v};
    if (delta(p) == 0)
      continue;
    if (!moduli_equal(igusa_from_uv(p), inv))
      continue;
    if (std::find(found.begin(), found.end(), p) == found.end())
      found.push_back(p);
  }
  if (found.empty()) {
    if (!any_regular_root && !rational_roots(cubic).empty())
      fail(Errc::inversion_singular, "inversion-singular: only u = -15 roots");
    fail(Errc::not_on_locus, "no rational (u,v) preimage");
  }
  std::sort(found.begin(), found.end(), [](const UVPoint &a, const UVPoint &b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  return found;
}

Rational d12_locus(const UVPoint &p) {
  return 4 * p.v - p.u * p.u + 110 * p.u - 1125;
}

Rational d8_locus(const UVPoint &p) { return p.v * p.v - 4 * p.u * p.u * p.u; }

Rational phi3_factor_constant() { return Rational(4294967296); }

Rational phi3_at_jpair(const JPair &jp) {
  auto lift = [&](const Rational &c) {
    return QuadRingElem::scalar(c, jp.e1, jp.e2);
  };
  // j1 = t, j2 = e1 - t
  const QuadRingElem t = QuadRingElem::generator(jp.e1, jp.e2);
  const std::array<QuadRingElem, 2> point{t, lift(jp.e1) - t};
  QuadRingElem value = data::table(data::Table::phi3).evaluate<QuadRingElem>(point, lift);
  if (value.c1 != 0)
    fail(Errc::identity_violation, "Phi3(j1, j2) is not symmetric in j1, j2");
  return value.c0;
}

Phi3Check phi3_identity_check(const UVPoint &p) {
  require_nondegenerate(p);
  Phi3Check out;
  Rational d = delta(p);
  Rational d3 = d * d * d;
  out.lhs = d3 * d3 * phi3_at_jpair(jpair_from_uv(p));
  const std::array<Rational, 2> uv{p.u, p.v};
  out.rhs = d12_locus(p) * data::table(data::Table::g1)(uv) *
            data::table(data::Table::g2)(uv);
  if (out.rhs != 0)
    out.ratio = out.lhs / out.rhs;
  if (out.lhs != phi3_factor_constant() * out.rhs)
    fail(Errc::identity_violation,
         "Phi3 factorization fails at (" + to_string(p) + ")");
  return out;
}

L2Reconstruction reconstruct_l2_equation(std::uint64_t seed, std::size_t points) {
  std::vector<Exponents> monomials;
  for (int a = 0; a <= 15; ++a)
    for (int b = 0; 2 * b <= 15 - a; ++b)
      for (int c = 0; 3 * c <= 15 - a - 2 * b; ++c) {
        int rest = 15 - a - 2 * b - 3 * c;
        if (rest % 5 == 0)
          monomials.push_back({a, b, c, rest / 5});
      }
  const std::size_t m = monomials.size();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 7);
  Matrix rows;
  while (rows.size() < points) {
    Rational u(num(rng), den(rng)), v(num(rng), den(rng));
    u.canonicalize();
    v.canonicalize();
    UVPoint p{u, v};
    if (delta(p) == 0)
      continue;
    IgusaInvariants inv = igusa_from_uv(p);
    const std::array<const Rational *, 4> J{&inv.J2, &inv.J4, &inv.J6, &inv.J10};
    std::vector<Rational> row(m);
    for (std::size_t k = 0; k < m; ++k) {
      Rational val(1);
      for (int i = 0; i < 4; ++i)
        if (monomials[k][i])
          val *= pow(*J[i], static_cast<unsigned>(monomials[k][i]));
      row[k] = val;
    }
    rows.push_back(std::move(row));
  }

  L2Reconstruction out;
  out.monomials = m;
  out.points = points;
  auto basis = nullspace(std::move(rows), m);
  out.nullity = basis.size();
  if (out.nullity != 1)
    fail(Errc::identity_violation, "locus equation: nullspace has dimension " +
                                       std::to_string(out.nullity) + ", expected 1");
  const Exponents anchor{7, 4, 0, 0};
  auto it = std::find(monomials.begin(), monomials.end(), anchor);
  const Rational scale = -1 / basis[0][static_cast<std::size_t>(it - monomials.begin())];
  out.equation = MultiPolyTable(4);
  for (std::size_t k = 0; k < m; ++k)
    out.equation.add_term(monomials[k], basis[0][k] * scale);

  out.diff = data::table(data::Table::l2_printed);
  for (const auto &[e, c] : out.equation.terms())
    out.diff.add_term(e, -c);
  return out;
}

} // namespace ellsub
