#pragma once

#include "ellsub/exact/rational.hpp"
#include "ellsub/exact/upoly.hpp"

namespace ellsub {

/// c0 + c1*t in Q[t] / (t^2 - e1*t + e2). Lets symmetric expressions in the
/// two roots of that quadratic be evaluated without leaving Q.
struct QuadRingElem {
  Rational c0, c1;
  Rational e1, e2;

  static QuadRingElem scalar(const Rational &c, const Rational &e1,
                             const Rational &e2) {
    return {c, 0, e1, e2};
  }
  static QuadRingElem generator(const Rational &e1, const Rational &e2) {
    return {0, 1, e1, e2};
  }

  QuadRingElem &operator+=(const QuadRingElem &o);
  QuadRingElem &operator-=(const QuadRingElem &o);
  QuadRingElem &operator*=(const QuadRingElem &o);

  friend QuadRingElem operator+(QuadRingElem a, const QuadRingElem &b) {
    return a += b;
  }
  friend QuadRingElem operator-(QuadRingElem a, const QuadRingElem &b) {
    return a -= b;
  }
  friend QuadRingElem operator*(QuadRingElem a, const QuadRingElem &b) {
    return a *= b;
  }
  friend bool operator==(const QuadRingElem &a, const QuadRingElem &b) {
    return a.c0 == b.c0 && a.c1 == b.c1 && a.e1 == b.e1 && a.e2 == b.e2;
  }
};

/// p(t) mod (t^2 - e1*t + e2).
QuadRingElem quad_reduce(const UniPoly &p, const Rational &e1,
                         const Rational &e2);

} // namespace ellsub
