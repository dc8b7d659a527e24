#include "ellsub/igusa.hpp"

#include "ellsub/error.hpp"
#include "ellsub/exact/linalg.hpp"
#include "ellsub/exact/poly_data.hpp"

#include <numeric>
#include <random>
#include <sstream>

namespace ellsub {

BinarySextic BinarySextic::from_coeffs(std::array<Rational, 7> coeffs) {
  BinarySextic f{std::move(coeffs)};
  if (f.is_zero())
    fail(Errc::domain, "zero binary sextic");
  return f;
}

BinarySextic BinarySextic::from_poly(const UniPoly &p) {
  if (p.degree() > 6)
    fail(Errc::domain, "degree exceeds 6: " + p.to_string());
  std::array<Rational, 7> a;
  for (int i = 0; i <= 6; ++i)
    a[i] = p.coeff(i);
  return from_coeffs(std::move(a));
}

UniPoly BinarySextic::dehomogenized() const {
  return UniPoly(std::vector<Rational>(a.begin(), a.end()));
}

bool BinarySextic::is_zero() const {
  for (const auto &c : a)
    if (c != 0)
      return false;
  return true;
}

BinarySextic parse_sextic(const std::string &text) {
  std::istringstream in(text);
  std::array<Rational, 7> a;
  std::string tok;
  int k = 0;
  while (in >> tok) {
    if (k == 7)
      fail(Errc::domain, "sextic needs exactly 7 coefficients: '" + text + "'");
    a[k++] = parse_rational(tok);
  }
  if (k != 7)
    fail(Errc::domain, "sextic needs exactly 7 coefficients: '" + text + "'");
  return BinarySextic::from_coeffs(std::move(a));
}

std::string to_string(const BinarySextic &f) {
  std::string s;
  for (int i = 0; i < 7; ++i)
    s += (i ? " " : "") + to_string(f.a[i]);
  return s;
}

BinarySextic transform(const BinarySextic &f, const Matrix2 &m,
                       const Rational &e) {
  if (m.det() == 0)
    fail(Errc::domain, "singular substitution matrix");
  if (e == 0)
    fail(Errc::domain, "zero scalar in sextic transform");
  // dehomogenize at Z = 1: sum a_i (aX + b)^i (cX + d)^(6-i)
  const UniPoly lx{m.b, m.a}, lz{m.d, m.c};
  std::array<UniPoly, 7> px, pz;
  px[0] = pz[0] = UniPoly::constant(1);
  for (int k = 1; k <= 6; ++k) {
    px[k] = px[k - 1] * lx;
    pz[k] = pz[k - 1] * lz;
  }
  UniPoly g;
  for (int i = 0; i <= 6; ++i)
    if (f.a[i] != 0)
      g += px[i] * pz[6 - i] * f.a[i];
  g *= e * e;
  std::array<Rational, 7> out;
  for (int i = 0; i <= 6; ++i)
    out[i] = g.coeff(i);
  return BinarySextic{std::move(out)};
}

Rational binary_discriminant(const BinarySextic &f) {
  if (f.is_zero())
    fail(Errc::domain, "zero binary sextic");
  if (f.a[6] != 0)
    return discriminant(f.dehomogenized());
  // f(1, k) is the new X^6 coefficient; a nonzero sextic has at most 6 roots
  for (int k = 1;; ++k) {
    Rational top(0);
    for (int i = 0; i <= 6; ++i)
      top += f.a[i] * pow(Rational(k), static_cast<unsigned>(6 - i));
    if (top != 0) {
      BinarySextic g = transform(f, Matrix2{1, 0, k, 1}, 1);
      return discriminant(g.dehomogenized());
    }
  }
}

IgusaInvariants igusa_invariants(const BinarySextic &f) {
  if (f.is_zero())
    fail(Errc::domain, "zero binary sextic");
  std::span<const Rational> point(f.a.data(), f.a.size());
  IgusaInvariants inv;
  inv.J2 = data::table(data::Table::j2)(point);
  inv.J4 = data::table(data::Table::j4)(point);
  inv.J6 = data::table(data::Table::j6)(point);
  inv.J10 = binary_discriminant(f);
  return inv;
}

AbsoluteInvariants absolute_invariants(const IgusaInvariants &inv) {
  if (inv.J2 == 0)
    fail(Errc::j2_zero, "absolute invariants undefined: J2 = 0");
  Rational j2sq = inv.J2 * inv.J2;
  Rational j2cube = j2sq * inv.J2;
  AbsoluteInvariants a;
  a.i1 = inv.J4 / j2sq;
  a.i2 = (inv.J2 * inv.J4 - 3 * inv.J6) / j2cube;
  a.i3 = inv.J10 / (j2cube * j2sq);
  return a;
}

namespace {

Rational pow_signed(const Rational &x, long e) {
  if (e >= 0)
    return pow(x, static_cast<unsigned>(e));
  return 1 / pow(x, static_cast<unsigned>(-e));
}

// extended gcd returning (g, s, t) with s*a + t*b = g
std::array<long, 3> ext_gcd(long a, long b) {
  if (b == 0)
    return {a, 1, 0};
  auto [g, s, t] = ext_gcd(b, a % b);
  return {g, t, s - (a / b) * t};
}

} // namespace

bool moduli_equal(const IgusaInvariants &a, const IgusaInvariants &b) {
  if (a.J10 == 0 || b.J10 == 0)
    fail(Errc::domain, "J10 = 0: not a genus-2 curve");
  const std::array<const Rational *, 4> x{&a.J2, &a.J4, &a.J6, &a.J10};
  const std::array<const Rational *, 4> y{&b.J2, &b.J4, &b.J6, &b.J10};
  const std::array<long, 4> w{1, 2, 3, 5};

  // lambda^w_i = y_i / x_i on the common support; solve for mu = lambda^g
  // with g the gcd of the supported weights, then check every component.
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < 4; ++i) {
    if ((*x[i] == 0) != (*y[i] == 0))
      return false;
    if (*x[i] != 0)
      support.push_back(i);
  }
  long g = 0;
  std::vector<long> bezout;
  for (std::size_t i : support) {
    if (g == 0) {
      g = w[i];
      bezout.assign(1, 1);
      continue;
    }
    auto [ng, s, t] = ext_gcd(g, w[i]);
    for (auto &c : bezout)
      c *= s;
    bezout.push_back(t);
    g = ng;
  }
  Rational mu(1);
  for (std::size_t k = 0; k < support.size(); ++k) {
    std::size_t i = support[k];
    mu *= pow_signed(*y[i] / *x[i], bezout[k]);
  }
  for (std::size_t i : support)
    if (pow_signed(mu, w[i] / g) != *y[i] / *x[i])
      return false;
  return true;
}

J6Reconstruction reconstruct_j6(std::uint64_t seed) {
  // isobaric: degree 6 in a0..a6, weight sum(i * e_i) = 18
  std::vector<Exponents> monomials;
  Exponents e(7, 0);
  auto rec = [&](auto &self, int var, int deg, int weight) -> void {
    if (var == 7) {
      if (deg == 0 && weight == 0)
        monomials.push_back(e);
      return;
    }
    for (int k = 0; k <= deg && var * k <= weight; ++k) {
      e[var] = k;
      self(self, var + 1, deg - k, weight - var * k);
    }
    e[var] = 0;
  };
  rec(rec, 0, 6, 18);
  const std::size_t m = monomials.size();

  auto eval_monomials = [&](const BinarySextic &f) {
    std::vector<Rational> row(m);
    for (std::size_t j = 0; j < m; ++j) {
      Rational v(1);
      for (int i = 0; i < 7; ++i)
        if (monomials[j][i])
          v *= pow(f.a[i], static_cast<unsigned>(monomials[j][i]));
      row[j] = v;
    }
    return row;
  };

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  auto rnd = [&] {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
  };

  Matrix invariance;
  auto push_difference = [&](const BinarySextic &f, const BinarySextic &g) {
    auto rf = eval_monomials(f), rg = eval_monomials(g);
    for (std::size_t j = 0; j < m; ++j)
      rg[j] -= rf[j];
    invariance.push_back(std::move(rg));
  };
  for (std::size_t k = 0; k < m + 20; ++k) {
    BinarySextic f;
    for (auto &c : f.a)
      c = rnd();
    push_difference(f, transform(f, Matrix2{1, rnd(), 0, 1}, 1));
  }
  for (int k = 0; k < 20; ++k) {
    BinarySextic f;
    for (auto &c : f.a)
      c = rnd();
    push_difference(f, transform(f, Matrix2{0, 1, 1, 0}, 1));
  }

  J6Reconstruction out;
  out.monomials = m;
  out.invariant_dimension = nullspace(invariance, m).size();
  if (out.invariant_dimension != 3)
    fail(Errc::identity_violation,
         "J6 reconstruction: invariant space has dimension " +
             std::to_string(out.invariant_dimension) + ", expected 3");

  // restriction to Y^2 = X^6 - s1 X^4 + s2 X^2 - 1
  Matrix system = invariance;
  Vector rhs(invariance.size(), 0);
  for (int k = 0; k < 8; ++k) {
    Rational s1 = rnd(), s2 = rnd();
    BinarySextic f{{-1, 0, s2, 0, -s1, 0, 1}};
    Rational u = s1 * s2, v = s1 * s1 * s1 + s2 * s2 * s2;
    system.push_back(eval_monomials(f));
    rhs.push_back(-20664 * u + 96 * v - 424 * u * u + 24 * u * u * u +
                  160 * u * v + 119880);
  }
  auto sol = solve_unique(system, rhs, m);
  if (!sol)
    fail(Errc::identity_violation,
         "J6 reconstruction: family restriction does not pin a unique J6");
  out.j6 = MultiPolyTable(7);
  for (std::size_t j = 0; j < m; ++j)
    out.j6.add_term(monomials[j], (*sol)[j]);
  return out;
}

} // namespace ellsub
