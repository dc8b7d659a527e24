#include "ellsub/exact/quad_ring.hpp"

#include "ellsub/error.hpp"

namespace ellsub {

namespace {

void check_same_ring(const QuadRingElem &a, const QuadRingElem &b) {
  if (a.e1 != b.e1 || a.e2 != b.e2)
    fail(Errc::internal, "quadratic ring elements from different quotients");
}

} // namespace

QuadRingElem &QuadRingElem::operator+=(const QuadRingElem &o) {
  check_same_ring(*this, o);
  c0 += o.c0;
  c1 += o.c1;
  return *this;
}

QuadRingElem &QuadRingElem::operator-=(const QuadRingElem &o) {
  check_same_ring(*this, o);
  c0 -= o.c0;
  c1 -= o.c1;
  return *this;
}

QuadRingElem &QuadRingElem::operator*=(const QuadRingElem &o) {
  check_same_ring(*this, o);
  // t^2 = e1 t - e2
  Rational tt = c1 * o.c1;
  Rational n0 = c0 * o.c0 - tt * e2;
  Rational n1 = c0 * o.c1 + c1 * o.c0 + tt * e1;
  c0 = std::move(n0);
  c1 = std::move(n1);
  return *this;
}

QuadRingElem quad_reduce(const UniPoly &p, const Rational &e1,
                         const Rational &e2) {
  QuadRingElem acc = QuadRingElem::scalar(0, e1, e2);
  const auto &c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    // acc = acc * t + c
    Rational n0 = -acc.c1 * e2 + *it;
    Rational n1 = acc.c0 + acc.c1 * e1;
    acc.c0 = std::move(n0);
    acc.c1 = std::move(n1);
  }
  return acc;
}

} // namespace ellsub
