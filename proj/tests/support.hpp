#pragma once

#include "ellsub/exact/rational.hpp"

#include <random>

namespace testing {

inline ellsub::Rational random_rational(std::mt19937_64 &rng, int span = 30,
                                        int maxden = 9) {
  std::uniform_int_distribution<int> num(-span, span), den(1, maxden);
  ellsub::Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline ellsub::Rational random_nonzero(std::mt19937_64 &rng, int span = 30,
                                       int maxden = 9) {
  for (;;) {
    auto q = random_rational(rng, span, maxden);
    if (q != 0)
      return q;
  }
}

} // namespace testing
