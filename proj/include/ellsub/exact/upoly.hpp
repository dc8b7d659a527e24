#pragma once

#include "ellsub/exact/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace ellsub {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The leading coefficient is nonzero unless the polynomial is zero.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly constant(const Rational &c);
  static UniPoly monomial(const Rational &c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  const std::vector<Rational> &coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  const Rational &leading() const;

  Rational operator()(const Rational &x) const;

  UniPoly derivative() const;
  UniPoly monic() const;

  UniPoly &operator+=(const UniPoly &o);
  UniPoly &operator-=(const UniPoly &o);
  UniPoly &operator*=(const UniPoly &o);
  UniPoly &operator*=(const Rational &c);

  friend UniPoly operator+(UniPoly a, const UniPoly &b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly &b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly &b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational &c) { return a *= c; }
  friend UniPoly operator-(UniPoly a) { return a *= Rational(-1); }
  friend bool operator==(const UniPoly &a, const UniPoly &b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string(const char *var = "x") const;

private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division. Throws on b = 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly &a, const UniPoly &b);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(UniPoly a, UniPoly b);

/// Sylvester resultant, evaluated by fraction-free elimination of the
/// Sylvester matrix after clearing denominators.
/// Res(f, g) = lc(f)^deg g * lc(g)^deg f * prod (alpha_i - beta_j).
Rational resultant(const UniPoly &f, const UniPoly &g);

/// disc(f) = (-1)^(n(n-1)/2) / lc(f) * Res(f, f'), n = deg f >= 1.
Rational discriminant(const UniPoly &f);

/// Distinct rational roots in increasing order.
std::vector<Rational> rational_roots(const UniPoly &p);

/// Primitive integer polynomial proportional to `p` (positive leading term).
std::vector<Integer> clear_denominators(const UniPoly &p);

} // namespace ellsub
