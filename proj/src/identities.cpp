#include "ellsub/identities.hpp"

#include "ellsub/autgroup.hpp"
#include "ellsub/elliptic_locus.hpp"
#include "ellsub/error.hpp"
#include "ellsub/exact/poly_data.hpp"
#include "ellsub/igusa.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace ellsub {

namespace {

class Sampler {
public:
  Sampler(std::uint64_t seed, std::uint64_t suite) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(suite)};
    rng_.seed(seq);
  }

  Rational rational(int span = 30, int maxden = 9) {
    std::uniform_int_distribution<int> num(-span, span), den(1, maxden);
    Rational q(num(rng_), den(rng_));
    q.canonicalize();
    return q;
  }

  Rational nonzero(int span = 30, int maxden = 9) {
    for (;;)
      if (Rational q = rational(span, maxden); q != 0)
        return q;
  }

  UVPoint uv() {
    for (;;)
      if (UVPoint p{rational(60, 7), rational(60, 7)}; delta(p) != 0)
        return p;
  }

  std::uint64_t next() { return rng_(); }

private:
  std::mt19937_64 rng_;
};

std::string show(const UVPoint &p) { return "(u,v) = (" + to_string(p) + ")"; }

// Runs `body` on points until `samples` were checked; the first failure or
// exception ends the suite.
IdentityRecord run_suite(std::string suite, std::string formula, std::size_t samples,
                         const std::function<std::optional<std::string>(std::size_t)> &body) {
  IdentityRecord r{std::move(suite), std::move(formula), samples, 0, true, {}};
  try {
    for (std::size_t i = 0; i < samples; ++i) {
      if (auto bad = body(i)) {
        r.passed = false;
        r.detail = *bad;
        return r;
      }
      ++r.checked;
    }
  } catch (const Error &e) {
    r.passed = false;
    r.detail = std::string(errc_name(e.code())) + ": " + e.what();
  }
  return r;
}

std::optional<BranchSet> involutive_set(Sampler &s) {
  Matrix2 m{s.rational(5, 3), s.rational(5, 3), s.rational(5, 3), 0};
  m.d = -m.a;
  if (m.det() == 0)
    return std::nullopt;
  BranchSet b;
  for (std::size_t i = 0; i < 3; ++i) {
    BranchSet one;
    one.points.fill(Rational(0));
    one.points[0] = s.rational(20, 5);
    b.points[2 * i] = one.points[0];
    b.points[2 * i + 1] = apply_mobius(one, m).points[0];
  }
  std::set<std::string> seen;
  for (const auto &p : b.points)
    if (!seen.insert(to_string(p)).second)
      return std::nullopt;
  return b;
}

std::optional<BranchSet> random_set(Sampler &s) {
  BranchSet b;
  std::set<std::string> seen;
  for (auto &p : b.points) {
    p = s.rational(20, 5);
    if (!seen.insert(to_string(p)).second)
      return std::nullopt;
  }
  if (s.next() % 4 == 0)
    b.points[s.next() % 6] = std::nullopt;
  return b;
}

std::string table_diff(const MultiPolyTable &printed, const MultiPolyTable &rebuilt,
                       const std::vector<std::string> &vars) {
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, c] : printed.terms()) {
    Rational r = rebuilt.coeff(e);
    if (r == c)
      continue;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i])
        mono += (mono.empty() ? "" : " ") + vars[i] + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    os << (first ? "" : "; ") << mono << ": printed " << to_string(c) << ", rebuilt " << to_string(r);
    first = false;
  }
  return first ? "no differences" : os.str();
}

} // namespace

std::vector<IdentityRecord> verify_identities(std::size_t n, std::uint64_t seed) {
  std::vector<IdentityRecord> out;
  if (n == 0)
    return out;
  std::uint64_t suite = 0;

  {
    Sampler s(seed, suite++);
    out.push_back(run_suite("family", "J(X^6 - s1 X^4 + s2 X^2 - 1) = J(u, v)", n,
                            [&](std::size_t) -> std::optional<std::string> {
                              for (;;) {
                                Rational s1 = s.rational(), s2 = s.rational();
                                UVPoint p = uv_from_s(s1, s2);
                                if (delta(p) == 0)
                                  continue;
                                if (igusa_invariants(sextic_from_s(s1, s2)) != igusa_from_uv(p))
                                  return "s1 = " + to_string(s1) + ", s2 = " + to_string(s2);
                                return std::nullopt;
                              }
                            }));
  }
  {
    Sampler s(seed, suite++);
    out.push_back(run_suite(
        "covariance", "J_2i(e^2 f(m)) = det(m)^6i e^4i J_2i(f)", n,
        [&](std::size_t) -> std::optional<std::string> {
          BinarySextic f;
          for (auto &c : f.a)
            c = s.rational(9, 4);
          if (f.is_zero())
            f.a[6] = 1;
          Matrix2 m{0, 0, 0, 0};
          while (m.det() == 0)
            m = {s.rational(4, 3), s.rational(4, 3), s.rational(4, 3), s.rational(4, 3)};
          Rational e = s.nonzero(5, 3);
          auto before = igusa_invariants(f), after = igusa_invariants(transform(f, m, e));
          Rational w = pow(m.det(), 6) * pow(e, 4);
          if (after.J2 != w * before.J2 || after.J4 != pow(w, 2) * before.J4 ||
              after.J6 != pow(w, 3) * before.J6 || after.J10 != pow(w, 5) * before.J10)
            return "f = " + to_string(f);
          return std::nullopt;
        }));
  }
  {
    Sampler s(seed, suite++);
    const bool off = l2_equation(igusa_invariants(BinarySextic{{0, -1, 0, 0, 0, 0, 1}})) != 0;
    auto r = run_suite("locus_equation", "L2(J(u, v)) = 0, also after weighted scaling", n,
                       [&](std::size_t) -> std::optional<std::string> {
                         UVPoint p = s.uv();
                         IgusaInvariants inv = igusa_from_uv(p);
                         Rational l = s.nonzero();
                         if (l2_equation(inv) != 0 ||
                             l2_equation({l * inv.J2, pow(l, 2) * inv.J4, pow(l, 3) * inv.J6,
                                          pow(l, 5) * inv.J10}) != 0)
                           return show(p);
                         return std::nullopt;
                       });
    if (r.passed && !off) {
      r.passed = false;
      r.detail = "L2 vanishes on X^6 - X";
    }
    out.push_back(std::move(r));
  }
  {
    Sampler s(seed, suite++);
    out.push_back(run_suite("dual_oracle", "pairing determinant = 0 for some pairing <=> L2 = 0", n,
                            [&](std::size_t i) -> std::optional<std::string> {
                              for (;;) {
                                auto b = i % 2 ? random_set(s) : involutive_set(s);
                                if (!b)
                                  continue;
                                bool pairing = has_elliptic_involution(*b);
                                bool locus =
                                    l2_equation(igusa_invariants(sextic_from_branch_set(*b))) == 0;
                                if (pairing != locus) {
                                  std::string pts;
                                  for (const auto &p : b->points)
                                    pts += (pts.empty() ? "" : " ") + to_string(p);
                                  return "branch set {" + pts + "}";
                                }
                                return std::nullopt;
                              }
                            }));
  }
  {
    Sampler s(seed, suite++);
    auto r = run_suite(
        "jpair_discriminant",
        "N1^2 - 4 N2^3 = (v^2 - 4u^3)(v - 9u + 27)^2 and e1^2 - 4 e2 = 2^16 (v^2 - 4u^3)(v - 9u + 27)^2 / Delta^2",
        n, [&](std::size_t) -> std::optional<std::string> {
          UVPoint p = s.uv();
          const Rational &u = p.u, &v = p.v;
          Rational n1 = v * v - 2 * u * u * u + 54 * u * u - 9 * u * v - 27 * v;
          Rational n2 = u * u + 9 * u - 3 * v;
          Rational w = v - 9 * u + 27, d = delta(p);
          JPair jp = jpair_from_uv(p);
          if (n1 * n1 - 4 * n2 * n2 * n2 != d8_locus(p) * w * w ||
              jp.e1 * jp.e1 - 4 * jp.e2 != 65536 * d8_locus(p) * w * w / (d * d))
            return show(p);
          return std::nullopt;
        });
    if (r.passed) {
      auto j1 = jpair_from_uv({25, -250}), j2 = jpair_from_uv({225, 6750}), j0 = jpair_from_uv({0, 0});
      const bool ok = j1.split && j1.split->first == 8000 && j1.split->second == 8000 && j2.split &&
                      j2.split->first == 54000 && j2.split->second == 54000 && j0.e1 == 0 && j0.e2 == 0;
      if (!ok) {
        r.passed = false;
        r.detail = "special j-pairs 8000/54000/0 not reproduced";
      } else {
        r.detail = "e2 uses the cube N2^3; j-pairs (8000, 8000), (54000, 54000), (0, 0) reproduced";
      }
    }
    out.push_back(std::move(r));
  }
  {
    Sampler s(seed, suite++);
    auto r = run_suite("inversion", "(u, v) in uv_from_igusa(J(u, v))", n,
                       [&](std::size_t) -> std::optional<std::string> {
                         UVPoint p = s.uv();
                         while (p.u == -15)
                           p = s.uv();
                         auto pre = uv_from_igusa(igusa_from_uv(p));
                         if (std::find(pre.begin(), pre.end(), p) == pre.end())
                           return show(p);
                         return std::nullopt;
                       });
    if (r.passed) {
      auto pre = uv_from_igusa(igusa_invariants(BinarySextic{{-1, 0, 0, 0, 0, 0, 1}}));
      if (pre != std::vector<UVPoint>{{0, 0}, {225, 6750}}) {
        r.passed = false;
        r.detail = "X^6 - 1 does not return (0, 0) and (225, 6750)";
      }
    }
    out.push_back(std::move(r));
  }
  {
    Sampler s(seed, suite++);
    auto r = run_suite("classification", "classify_uv agrees across all preimages on the D8 and D12 strata", n,
                       [&](std::size_t i) -> std::optional<std::string> {
                         for (;;) {
                           Rational t = s.nonzero(12, 3);
                           UVPoint p = i % 2 ? UVPoint{t * t, 2 * t * t * t}
                                             : UVPoint{t, (t * t - 110 * t + 1125) / 4};
                           if (delta(p) == 0 || p.u == -15)
                             continue;
                           for (const auto &q : uv_from_igusa(igusa_from_uv(p)))
                             if (classify_uv(q) != classify_uv(p))
                               return show(p) + " and " + show(q);
                           return std::nullopt;
                         }
                       });
    if (r.passed) {
      const std::vector<std::pair<UVPoint, AutGroup>> fixed{
          {{25, -250}, AutGroup::GL2_3}, {{0, 0}, AutGroup::Z3semiD8}, {{225, 6750}, AutGroup::Z3semiD8},
          {{4, 16}, AutGroup::D8},       {{5, 150}, AutGroup::D12},    {{1, 1}, AutGroup::V4}};
      for (const auto &[p, g] : fixed)
        if (classify_uv(p) != g) {
          r.passed = false;
          r.detail = show(p) + " classified as " + std::string(to_string(classify_uv(p)));
        }
      if (classify_sextic(BinarySextic{{0, -1, 0, 0, 0, 0, 1}}).group != AutGroup::Z10) {
        r.passed = false;
        r.detail = "X^6 - X is not Z10";
      }
    }
    out.push_back(std::move(r));
  }
  {
    Sampler s(seed, suite++);
    out.push_back(run_suite(
        "dihedral_factors",
        "a^8 b^8 (4v - u^2 + 110u - 1125) = -P6(a, b) and a^12 b^12 (v^2 - 4u^3) = P4(a, b)^2 for c = 1/(ab)", n,
        [&](std::size_t) -> std::optional<std::string> {
          Rational a = s.nonzero(9, 5), b = s.nonzero(9, 5), c = 1 / (a * b);
          Rational A = a * a, B = b * b, C = c * c;
          UVPoint p{(A + B + C) * (A * B + A * C + B * C),
                    pow(A + B + C, 3) + pow(A * B + A * C + B * C, 3)};
          Rational a3b = pow(a, 3) * b, ab3 = a * pow(b, 3), big = pow(a, 4) * pow(b, 3),
                   big2 = pow(b, 4) * pow(a, 3), six = 6 * A * B;
          Rational p6 = (big - a + a3b + b + six + ab3 - big2) * (big + a - a3b + b + six - ab3 + big2) *
                        (big - a - a3b + b - six - ab3 - big2) * (big + a + a3b + b - six + ab3 + big2);
          Rational ab = a * b;
          Rational p4 = (b - 1) * (b + 1) * (B + b + 1) * (B - b + 1) * (a - 1) * (a + 1) * (A + a + 1) *
                        (A - a + 1) * (ab - 1) * (ab + 1) * (ab * ab + ab + 1) * (ab * ab - ab + 1);
          if (d12_locus(p) * pow(a, 8) * pow(b, 8) != -p6 || d8_locus(p) * pow(a, 12) * pow(b, 12) != p4 * p4)
            return "a = " + to_string(a) + ", b = " + to_string(b);
          return std::nullopt;
        }));
  }
  {
    Sampler s(seed, suite++);
    std::set<Rational> delta4_ratios;
    auto r = run_suite("phi3_factorization",
                       "Delta^6 Phi3(j1, j2) = 2^32 (4v - u^2 + 110u - 1125) g1 g2", n,
                       [&](std::size_t) -> std::optional<std::string> {
                         UVPoint p = s.uv();
                         Phi3Check c = phi3_identity_check(p); // throws on a mismatch
                         if (c.rhs != 0)
                           delta4_ratios.insert(c.lhs / (c.rhs * pow(delta(p), 2)));
                         return std::nullopt;
                       });
    if (r.passed) {
      for (UVPoint p : {UVPoint{25, -250}, UVPoint{225, 6750}})
        if (phi3_identity_check(p).lhs != 0) {
          r.passed = false;
          r.detail = "Phi3 does not vanish at " + show(p);
        }
    }
    if (r.passed)
      r.detail = "with Delta^4 in place of Delta^6 the ratio takes " + std::to_string(delta4_ratios.size()) +
                 " distinct values";
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r{"j6_reconstruction", "J6 = unique invariant matching the Jacobi-family restriction", 0, 1,
                     true, {}};
    try {
      auto j6 = reconstruct_j6(seed);
      r.passed = j6.invariant_dimension == 3 && j6.j6 == data::table(data::Table::j6);
      r.detail = "invariant dimension " + std::to_string(j6.invariant_dimension) + ", " +
                 std::to_string(j6.j6.size()) + " terms; " +
                 table_diff(data::table(data::Table::j6_printed), j6.j6,
                            {"a0", "a1", "a2", "a3", "a4", "a5", "a6"});
    } catch (const Error &e) {
      r.passed = false;
      r.detail = std::string(errc_name(e.code())) + ": " + e.what();
    }
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r{"l2_reconstruction", "L2 = one-dimensional nullspace of weight-15 monomials on the locus", 0,
                     1, true, {}};
    try {
      auto l2 = reconstruct_l2_equation(seed);
      r.passed = l2.nullity == 1 && l2.equation == data::table(data::Table::l2);
      r.detail = "nullity " + std::to_string(l2.nullity) + " over " + std::to_string(l2.monomials) +
                 " monomials; " + table_diff(data::table(data::Table::l2_printed), l2.equation, {"J2", "J4", "J6", "J10"}) +
                 "; the printed J4^3 J6^3 token is read as -6912";
    } catch (const Error &e) {
      r.passed = false;
      r.detail = std::string(errc_name(e.code())) + ": " + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

} // namespace ellsub
