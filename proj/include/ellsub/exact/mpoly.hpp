#pragma once

#include "ellsub/exact/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ellsub {

using Exponents = std::vector<int>;

/// Sparse multivariate polynomial: exponent vector -> nonzero coefficient.
/// Every exponent vector has length nvars().
///
/// Text form, one term per line, `#` starts a comment:
///
///     e0 e1 ... ek : p/q
class MultiPolyTable {
public:
  explicit MultiPolyTable(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPolyTable parse(std::string_view text);

  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::map<Exponents, Rational> &terms() const { return terms_; }

  /// Adds c to the coefficient of `e`; drops the term if it cancels.
  void add_term(const Exponents &e, const Rational &c);
  Rational coeff(const Exponents &e) const;

  /// Total degree under integer weights (plain degree for all-ones).
  int weighted_degree(std::span<const int> weights) const;
  bool is_weighted_homogeneous(std::span<const int> weights) const;

  std::string serialize() const;

  /// Evaluates over any commutative ring with +, * and construction from a
  /// Rational supplied by `lift`.
  template <class Ring, class Lift>
  Ring evaluate(std::span<const Ring> point, Lift lift) const;

  Rational operator()(std::span<const Rational> point) const {
    return evaluate<Rational>(point, [](const Rational &c) { return c; });
  }

  friend bool operator==(const MultiPolyTable &a, const MultiPolyTable &b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

private:
  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;
};

template <class Ring, class Lift>
Ring MultiPolyTable::evaluate(std::span<const Ring> point, Lift lift) const {
  // powers[i][k] = point[i]^k, built lazily up to the largest exponent used
  std::vector<int> maxexp(nvars_, 0);
  for (const auto &[e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i)
      maxexp[i] = std::max(maxexp[i], e[i]);

  std::vector<std::vector<Ring>> powers(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    powers[i].reserve(maxexp[i] + 1);
    powers[i].push_back(lift(Rational(1)));
    for (int k = 1; k <= maxexp[i]; ++k)
      powers[i].push_back(powers[i].back() * point[i]);
  }

  Ring sum = lift(Rational(0));
  for (const auto &[e, c] : terms_) {
    Ring term = lift(c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] > 0)
        term = term * powers[i][e[i]];
    sum = sum + term;
  }
  return sum;
}

} // namespace ellsub
