#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ellsub {

/// Permutation of {0..n-1}; printed and parsed 1-based in cycle notation.
/// Products follow the left-to-right convention: (p * q)(x) = q(p(x)),
/// and p ^ q = q^-1 p q.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<int> images); // throws Errc::domain unless a bijection

  static Perm identity(int n);
  /// Cycles given 1-based, e.g. {{1,2,3},{4,5}}.
  static Perm from_cycles(int n, const std::vector<std::vector<int>> &cycles);
  /// "(1,2,3)(4,5)" or "()" in S_n.
  static Perm parse(int n, std::string_view text);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
  const std::vector<int> &images() const { return img_; }

  Perm inverse() const;
  bool is_identity() const;
  /// +1 even, -1 odd.
  int sign() const;
  std::vector<std::vector<int>> cycles() const; // 0-based, fixed points included

  friend Perm operator*(const Perm &p, const Perm &q);
  friend Perm operator^(const Perm &p, const Perm &q) { return q.inverse() * p * q; }
  friend bool operator==(const Perm &, const Perm &) = default;
  friend auto operator<=>(const Perm &, const Perm &) = default;

  std::string to_string() const;

private:
  std::vector<int> img_;
};

Perm pow(const Perm &p, int e);

/// Multiset of cycle lengths (fixed points included), sorted descending.
class CycleType {
public:
  CycleType() = default;
  explicit CycleType(std::vector<int> parts);
  static CycleType of(const Perm &p);
  /// "4 2 2 1" or "4,2,2,1".
  static CycleType parse(std::string_view text);

  const std::vector<int> &parts() const { return parts_; }
  int degree() const;
  int count(int length) const;
  int max_part() const { return parts_.empty() ? 0 : parts_.front(); }
  /// Order of the centralizer of an element of this type in S_n.
  std::uint64_t centralizer_order() const;
  int sign() const;

  friend bool operator==(const CycleType &, const CycleType &) = default;
  friend auto operator<=>(const CycleType &, const CycleType &) = default;

  std::string to_string() const;

private:
  std::vector<int> parts_;
};

/// n minus the number of cycles, fixed points included.
int index(const Perm &p);

/// A fixed permutation of the given type: cycles in descending length over
/// consecutive points.
Perm canonical_element(const CycleType &t);

} // namespace ellsub
