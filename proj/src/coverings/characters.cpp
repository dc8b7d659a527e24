#include "ellsub/coverings/characters.hpp"

#include "ellsub/error.hpp"

#include <bit>
#include <map>
#include <mutex>

namespace ellsub {

namespace {

void partitions_rec(int remaining, int maxpart, Partition &cur, std::vector<Partition> &out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(remaining, maxpart); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(remaining - k, k, cur, out);
    cur.pop_back();
  }
}

// Beta-set of lambda padded to length n as a bitmask over 0..2n-1.
std::uint64_t beta_mask(const Partition &lambda, int n) {
  std::uint64_t mask = 0;
  for (int i = 0; i < n; ++i) {
    int part = i < static_cast<int>(lambda.size()) ? lambda[static_cast<std::size_t>(i)] : 0;
    mask |= std::uint64_t{1} << (part + n - 1 - i);
  }
  return mask;
}

class MNTable {
public:
  // value for the beta-set `mask` after the parts mu[0..pos) are removed
  Integer eval(std::uint64_t mask, const std::vector<int> &mu, std::size_t pos) {
    if (pos == mu.size())
      return 1;
    auto key = std::make_tuple(mask, mu, pos);
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;
    const int k = mu[pos];
    Integer sum = 0;
    for (int b = k; b < 64; ++b) {
      if (!(mask >> b & 1) || (mask >> (b - k) & 1))
        continue;
      // beads strictly between b - k and b give the leg length
      std::uint64_t between = (mask >> (b - k + 1)) & ((std::uint64_t{1} << (k - 1)) - 1);
      int sign = std::popcount(between) % 2 ? -1 : 1;
      std::uint64_t next = (mask & ~(std::uint64_t{1} << b)) | (std::uint64_t{1} << (b - k));
      sum += sign * eval(next, mu, pos + 1);
    }
    memo_.emplace(key, sum);
    return sum;
  }

private:
  std::map<std::tuple<std::uint64_t, std::vector<int>, std::size_t>, Integer> memo_;
};

} // namespace

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

Integer character_value(const Partition &lambda, const CycleType &mu) {
  int n = 0;
  for (int k : lambda)
    n += k;
  if (n != mu.degree())
    fail(Errc::domain, "partition and cycle type have different sizes");
  if (2 * n > 64)
    fail(Errc::domain, "character tables limited to n <= 32");
  static std::mutex lock;
  static MNTable table;
  std::lock_guard guard(lock);
  return table.eval(beta_mask(lambda, n), mu.parts(), 0);
}

Integer character_degree(const Partition &lambda) {
  int n = 0;
  for (int k : lambda)
    n += k;
  Integer num = 1, den = 1;
  for (int k = 2; k <= n; ++k)
    num *= k;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      int arm = lambda[i] - j - 1, leg = 0;
      for (std::size_t r = i + 1; r < lambda.size() && lambda[r] > j; ++r)
        ++leg;
      den *= arm + leg + 1;
    }
  return num / den;
}

Integer class_size(const CycleType &mu) {
  Integer f = 1;
  for (int k = 2; k <= mu.degree(); ++k)
    f *= k;
  Integer z = 1;
  const auto &p = mu.parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i])
      ++j;
    for (std::size_t m = 1; m <= j - i; ++m)
      z *= Integer(p[i]) * static_cast<unsigned long>(m);
    i = j;
  }
  return f / z;
}

Integer structure_constant(const CycleType &a, const CycleType &b, const CycleType &c) {
  const int n = a.degree();
  if (b.degree() != n || c.degree() != n)
    fail(Errc::domain, "cycle types of different degree");
  Rational sum = 0;
  for (const auto &lambda : partitions(n)) {
    Integer ca = character_value(lambda, a), cb = character_value(lambda, b),
            cc = character_value(lambda, c);
    if (ca == 0 || cb == 0 || cc == 0)
      continue;
    Rational term(Integer(ca * cb * cc), character_degree(lambda));
    term.canonicalize();
    sum += term;
  }
  Integer f = 1;
  for (int k = 2; k <= n; ++k)
    f *= k;
  Rational scale(Integer(class_size(a) * class_size(b)), f);
  scale.canonicalize();
  Rational n_pairs = sum * scale;
  if (n_pairs.get_den() != 1)
    fail(Errc::internal, "structure constant is not an integer");
  return n_pairs.get_num();
}

} // namespace ellsub
