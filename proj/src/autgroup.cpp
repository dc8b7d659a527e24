#include "ellsub/autgroup.hpp"

#include "ellsub/error.hpp"

#include <algorithm>

namespace ellsub {

std::string_view to_string(AutGroup g) {
  switch (g) {
  case AutGroup::Z2: return "Z2";
  case AutGroup::Z10: return "Z10";
  case AutGroup::V4: return "V4";
  case AutGroup::D8: return "D8";
  case AutGroup::D12: return "D12";
  case AutGroup::Z3semiD8: return "Z3semiD8";
  case AutGroup::GL2_3: return "GL2_3";
  }
  return "?";
}

int involution_class_count(AutGroup g) {
  switch (g) {
  case AutGroup::Z2:
  case AutGroup::Z10:
    return 0;
  case AutGroup::GL2_3:
    return 1;
  default:
    return 2;
  }
}

AutGroup classify_uv(const UVPoint &p) {
  require_nondegenerate(p);
  if (p == UVPoint{25, -250})
    return AutGroup::GL2_3;
  if (p == UVPoint{0, 0} || p == UVPoint{225, 6750})
    return AutGroup::Z3semiD8;
  if (d8_locus(p) == 0)
    return AutGroup::D8;
  if (d12_locus(p) == 0)
    return AutGroup::D12;
  return AutGroup::V4;
}

Classification classify_sextic(const BinarySextic &f) {
  IgusaInvariants inv = igusa_invariants(f);
  if (inv.J10 == 0)
    fail(Errc::domain, "J10 = 0: not a genus-2 curve");
  Classification out;
  if (l2_equation(inv) != 0) {
    out.group = inv.J2 == 0 && inv.J4 == 0 && inv.J6 == 0 ? AutGroup::Z10 : AutGroup::Z2;
    return out;
  }
  out.preimages = uv_from_igusa(inv);
  out.group = classify_uv(out.preimages.front());
  for (const auto &p : out.preimages)
    if (classify_uv(p) != out.group)
      fail(Errc::internal, "preimages (" + to_string(out.preimages.front()) + ") and (" +
                               to_string(p) + ") classify differently");
  return out;
}

std::string to_string(const ProjPoint &p) { return p ? to_string(*p) : "inf"; }

ProjPoint parse_proj_point(std::string_view text) {
  if (text == "inf" || text == "oo" || text == "infinity")
    return std::nullopt;
  return parse_rational(text);
}

void require_distinct(const BranchSet &b) {
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (b.points[i] == b.points[j])
        fail(Errc::domain, "repeated branch point " + to_string(b.points[i]));
}

BranchSet apply_mobius(const BranchSet &b, const Matrix2 &m) {
  if (m.det() == 0)
    fail(Errc::domain, "singular Mobius map");
  BranchSet out;
  for (std::size_t i = 0; i < 6; ++i) {
    const ProjPoint &x = b.points[i];
    if (!x) {
      out.points[i] = m.c == 0 ? ProjPoint{} : ProjPoint{m.a / m.c};
      continue;
    }
    Rational den = m.c * *x + m.d;
    out.points[i] = den == 0 ? ProjPoint{} : ProjPoint{(m.a * *x + m.b) / den};
  }
  return out;
}

BinarySextic sextic_from_branch_set(const BranchSet &b) {
  require_distinct(b);
  UniPoly f{1};
  for (const auto &p : b.points)
    if (p)
      f *= UniPoly{-*p, 1};
  return BinarySextic::from_poly(f);
}

namespace {

// The 15 perfect matchings of {0..5}.
std::vector<std::array<std::pair<int, int>, 3>> perfect_matchings() {
  std::vector<std::array<std::pair<int, int>, 3>> out;
  for (int a = 1; a < 6; ++a) {
    std::vector<int> rest;
    for (int k = 1; k < 6; ++k)
      if (k != a)
        rest.push_back(k);
    for (int b = 1; b < 4; ++b) {
      std::vector<int> last;
      for (int k = 1; k < 4; ++k)
        if (k != b)
          last.push_back(rest[static_cast<std::size_t>(k)]);
      out.push_back({{{0, a}, {rest[0], rest[static_cast<std::size_t>(b)]}, {last[0], last[1]}}});
    }
  }
  return out;
}

} // namespace

std::vector<PairingCertificate> elliptic_pairings(const BranchSet &b) {
  require_distinct(b);
  BranchSet finite = b;
  if (std::any_of(b.points.begin(), b.points.end(), [](const ProjPoint &p) { return !p; })) {
    // x -> 1/(x - k) for an integer k outside the set sends k to infinity
    Rational k = 0;
    while (std::find(b.points.begin(), b.points.end(), ProjPoint{k}) != b.points.end())
      k += 1;
    finite = apply_mobius(b, Matrix2{0, 1, 1, -k});
  }
  std::vector<PairingCertificate> out;
  for (const auto &pairing : perfect_matchings()) {
    std::array<std::array<Rational, 3>, 3> m;
    for (std::size_t r = 0; r < 3; ++r) {
      const Rational &p = *finite.points[static_cast<std::size_t>(pairing[r].first)];
      const Rational &q = *finite.points[static_cast<std::size_t>(pairing[r].second)];
      m[r] = {1, -(p + q), p * q};
    }
    Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    out.push_back({pairing, det});
  }
  return out;
}

bool has_elliptic_involution(const BranchSet &b) {
  auto certs = elliptic_pairings(b);
  return std::any_of(certs.begin(), certs.end(),
                     [](const PairingCertificate &c) { return c.det == 0; });
}

} // namespace ellsub
