#pragma once

#include "ellsub/exact/mpoly.hpp"
#include "ellsub/exact/rational.hpp"
#include "ellsub/exact/upoly.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace ellsub {

/// f(X,Z) = a6 X^6 + a5 X^5 Z + ... + a0 Z^6; the curve is Y^2 = f(X,1).
/// a[i] is the coefficient of X^i Z^(6-i).
struct BinarySextic {
  std::array<Rational, 7> a;

  static BinarySextic from_coeffs(std::array<Rational, 7> coeffs);
  /// Monic-or-not polynomial of degree <= 6 in X read as a sextic.
  static BinarySextic from_poly(const UniPoly &p);

  UniPoly dehomogenized() const; // f(X, 1)
  bool is_zero() const;

  friend bool operator==(const BinarySextic &, const BinarySextic &) = default;
};

/// Parses seven rationals `a0 a1 ... a6`.
BinarySextic parse_sextic(const std::string &text);

struct IgusaInvariants {
  Rational J2, J4, J6, J10;

  friend bool operator==(const IgusaInvariants &, const IgusaInvariants &) = default;
};

struct AbsoluteInvariants {
  Rational i1, i2, i3;

  friend bool operator==(const AbsoluteInvariants &, const AbsoluteInvariants &) = default;
};

/// 2x2 matrix acting by (X, Z) -> (aX + bZ, cX + dZ).
struct Matrix2 {
  Rational a, b, c, d;
  Rational det() const { return a * d - b * c; }
};

/// J2, J4 from their tables, J6 from the reconstructed table, J10 the
/// discriminant of the binary form.
IgusaInvariants igusa_invariants(const BinarySextic &f);

/// Discriminant of the binary form. When a6 = 0 the form is first moved by
/// Z -> Z + kX (det 1) so that the X^6 coefficient is nonzero.
Rational binary_discriminant(const BinarySextic &f);

/// e^2 * f(aX + bZ, cX + dZ). J_{2i} scales by det(m)^(6i) e^(4i).
BinarySextic transform(const BinarySextic &f, const Matrix2 &m, const Rational &e);

/// (J4/J2^2, (J2 J4 - 3 J6)/J2^3, J10/J2^5). Throws Errc::j2_zero.
AbsoluteInvariants absolute_invariants(const IgusaInvariants &inv);

/// Equality as points of weighted projective space with weights (1,2,3,5):
/// some lambda != 0 (over the algebraic closure) has J'_{2i} = lambda^i J_{2i}.
/// Both J10 must be nonzero.
bool moduli_equal(const IgusaInvariants &a, const IgusaInvariants &b);

struct J6Reconstruction {
  MultiPolyTable j6;
  /// Dimension of the space of isobaric degree-6 weight-18 polynomials
  /// invariant under the sampled substitutions; 3 (J2^3, J2 J4, J6) expected.
  std::size_t invariant_dimension = 0;
  std::size_t monomials = 0;
};

/// Rebuilds J6 from invariance plus its restriction to the Jacobi family.
/// Deterministic for a fixed seed. Throws Errc::identity_violation when the
/// invariant space is not 3-dimensional or the system has no unique solution.
J6Reconstruction reconstruct_j6(std::uint64_t seed = 1);

std::string to_string(const BinarySextic &f);

} // namespace ellsub
