#pragma once

#include "ellsub/exact/mpoly.hpp"
#include "ellsub/exact/upoly.hpp"
#include "ellsub/igusa.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ellsub {

/// Coordinates of a pair (genus-2 curve, elliptic involution). Meaningful
/// only where Delta(u,v) = u^2 - 4v + 18u - 27 is nonzero; operations that
/// need that check it themselves.
struct UVPoint {
  Rational u, v;

  friend bool operator==(const UVPoint &, const UVPoint &) = default;
};

Rational delta(const UVPoint &p);

/// Throws Errc::degenerate when Delta(p) = 0.
void require_nondegenerate(const UVPoint &p);

/// Symmetric data of the two degree-2 elliptic subfields: e1 = j1 + j2,
/// e2 = j1 * j2, and (j1, j2) themselves when e1^2 - 4 e2 is a square in Q.
struct JPair {
  Rational e1, e2;
  std::optional<std::pair<Rational, Rational>> split;
};

/// u = s1 s2 / s3, v = (s1^3 s3 + s2^3) / s3^2.
UVPoint uv_from_s(const Rational &s1, const Rational &s2, const Rational &s3 = 1);

/// Y^2 = X^6 - s1 X^4 + s2 X^2 - 1.
BinarySextic sextic_from_s(const Rational &s1, const Rational &s2);

IgusaInvariants igusa_from_uv(const UVPoint &p);

/// e1 = 256 N1 / Delta, e2 = 65536 N2^3 / Delta^2 with
/// N1 = v^2 - 2u^3 + 54u^2 - 9uv - 27v and N2 = u^2 + 9u - 3v.
JPair jpair_from_uv(const UVPoint &p);

/// e1^2 - 4 e2 = 2^16 (v^2 - 4u^3)(v - 9u + 27)^2 / Delta^2.
Rational jpair_discriminant(const UVPoint &p);

/// Point of the line v = 9(u - 3) whose two subfields both have
/// j-invariant `j`: u = 9 - j/256, v = 9(6 - j/256). j = 0 is degenerate.
UVPoint equal_j_family(const Rational &j);

/// (384 - j/16, 2^-14 j^2, 2^-21 j^2 (53248 - 3j), 2^-26 j^4).
IgusaInvariants m1_embedding(const Rational &j);

/// Weight-15 defining polynomial of the locus, evaluated at the invariants.
Rational l2_equation(const IgusaInvariants &inv);

/// Cubic in u satisfied by every preimage, in terms of i1, i2.
UniPoly inversion_cubic(const AbsoluteInvariants &abs);

/// All rational (u,v) whose invariants are moduli-equal to `inv`.
/// Throws Errc::not_on_locus off the locus or when no rational candidate
/// survives, Errc::inversion_singular for J2 = 0 or only u = -15 roots.
std::vector<UVPoint> uv_from_igusa(const IgusaInvariants &inv);

/// 4v - u^2 + 110u - 1125; vanishes when D12 is in the automorphism group.
Rational d12_locus(const UVPoint &p);

/// v^2 - 4u^3; vanishes when D8 is in the automorphism group.
Rational d8_locus(const UVPoint &p);

/// Fixed constant c in Delta^6 Phi3(j1, j2) = c * (4v - u^2 + 110u - 1125) g1 g2.
Rational phi3_factor_constant();

struct Phi3Check {
  Rational lhs;                 // Delta^6 * Phi3(j1, j2)
  Rational rhs;                 // (4v - u^2 + 110u - 1125) * g1 * g2
  std::optional<Rational> ratio; // lhs / rhs when rhs != 0
};

/// Evaluates both sides exactly, Phi3 through the quotient ring of
/// t^2 - e1 t + e2. Throws Errc::identity_violation unless lhs = c * rhs.
Phi3Check phi3_identity_check(const UVPoint &p);

/// Phi3(j1, j2) as an exact rational, via the quotient ring.
Rational phi3_at_jpair(const JPair &jp);

struct L2Reconstruction {
  MultiPolyTable equation;   // normalized: coefficient of J2^7 J4^4 is -1
  std::size_t monomials = 0; // weight-15 monomials in J2, J4, J6, J10
  std::size_t points = 0;
  std::size_t nullity = 0;
  MultiPolyTable diff;       // printed minus reconstructed
};

/// Nullspace of the weight-15 monomials evaluated at `points` random
/// parameterized points. Throws Errc::identity_violation if the nullspace
/// is not one-dimensional.
L2Reconstruction reconstruct_l2_equation(std::uint64_t seed = 1,
                                         std::size_t points = 110);

std::string to_string(const UVPoint &p);

} // namespace ellsub
