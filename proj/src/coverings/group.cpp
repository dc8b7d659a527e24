#include "ellsub/coverings/group.hpp"

#include "ellsub/error.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace ellsub {

std::string_view to_string(GeneratedGroup g) {
  switch (g) {
  case GeneratedGroup::Sn: return "Sn";
  case GeneratedGroup::An: return "An";
  case GeneratedGroup::other: return "other";
  }
  return "?";
}

namespace {

int degree_of(std::span<const Perm> gens) {
  if (gens.empty())
    fail(Errc::domain, "empty generator list");
  int n = gens.front().degree();
  for (const auto &g : gens)
    if (g.degree() != n)
      fail(Errc::domain, "generators of different degree");
  return n;
}

int find_root(std::vector<int> &parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] =
        parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

// Finest block system in which 0 and b share a block (Atkinson).
bool block_is_trivial(std::span<const Perm> gens, int n, int b) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::pair<int, int>> pending{{0, b}};
  parent[static_cast<std::size_t>(b)] = 0;
  int classes = n - 1;
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    for (const auto &g : gens) {
      int rx = find_root(parent, g(x)), ry = find_root(parent, g(y));
      if (rx != ry) {
        parent[static_cast<std::size_t>(ry)] = rx;
        --classes;
        pending.emplace_back(rx, ry);
      }
    }
  }
  return classes == 1;
}

bool is_prime(int p) {
  if (p < 2)
    return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

// An element whose power is a single p-cycle with p prime and p <= n - 3
// proves that a primitive group contains A_n (Jordan).
bool has_jordan_certificate(const Perm &g, int n) {
  auto parts = CycleType::of(g).parts();
  for (int p : parts) {
    if (!is_prime(p) || p > n - 3 || std::count(parts.begin(), parts.end(), p) != 1)
      continue;
    bool coprime = true;
    for (int q : parts)
      if (q != p && q % p == 0)
        coprime = false;
    if (coprime)
      return true;
  }
  return false;
}

struct Level {
  int base;
  std::vector<Perm> gens;            // strong generators fixing earlier base points
  std::vector<std::optional<Perm>> transversal; // u_x maps base to x
};

class StabilizerChain {
public:
  StabilizerChain(int n, std::span<const Perm> gens) : n_(n) {
    for (const auto &g : gens)
      if (!g.is_identity()) {
        if (levels_.empty())
          new_level(g);
        levels_[0].gens.push_back(g);
      }
    if (!levels_.empty())
      process(0);
  }

  Integer order() const {
    Integer o = 1;
    for (const auto &lv : levels_) {
      long count = 0;
      for (const auto &t : lv.transversal)
        if (t)
          ++count;
      o *= count;
    }
    return o;
  }

private:
  void new_level(const Perm &g) {
    int b = 0;
    while (g(b) == b)
      ++b;
    levels_.push_back(Level{b, {}, {}});
  }

  // Sift through levels >= from; the residue and the level it stopped at.
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const {
    std::size_t i = from;
    for (; i < levels_.size(); ++i) {
      const auto &lv = levels_[i];
      const auto &t = lv.transversal[static_cast<std::size_t>(g(lv.base))];
      if (!t)
        return {g, i};
      g = g * t->inverse();
    }
    return {g, i};
  }

  void rebuild_orbit(std::size_t i) {
    auto &lv = levels_[i];
    lv.transversal.assign(static_cast<std::size_t>(n_), std::nullopt);
    lv.transversal[static_cast<std::size_t>(lv.base)] = Perm::identity(n_);
    std::queue<int> q;
    q.push(lv.base);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (const auto &s : lv.gens) {
        int y = s(x);
        if (!lv.transversal[static_cast<std::size_t>(y)]) {
          lv.transversal[static_cast<std::size_t>(y)] =
              *lv.transversal[static_cast<std::size_t>(x)] * s;
          q.push(y);
        }
      }
    }
  }

  // Makes level i's Schreier generators sift to the identity through the
  // levels below it; residues join the generating sets of every level they
  // fix the earlier base points of.
  void process(std::size_t i) {
    rebuild_orbit(i);
    for (bool changed = true; changed;) {
      changed = false;
      const auto gens = levels_[i].gens;
      for (int x = 0; x < n_ && !changed; ++x) {
        if (!levels_[i].transversal[static_cast<std::size_t>(x)])
          continue;
        for (const auto &s : gens) {
          const Perm ux = *levels_[i].transversal[static_cast<std::size_t>(x)];
          const Perm uy = *levels_[i].transversal[static_cast<std::size_t>(s(x))];
          Perm schreier = ux * s * uy.inverse();
          if (schreier.is_identity())
            continue;
          auto [residue, stop] = sift(schreier, i + 1);
          if (residue.is_identity())
            continue;
          if (stop == levels_.size())
            new_level(residue);
          for (std::size_t k = i + 1; k <= stop; ++k)
            levels_[k].gens.push_back(residue);
          for (std::size_t k = stop + 1; k-- > i + 1;)
            process(k);
          changed = true; // level i's generators are unchanged, but recheck
          break;
        }
      }
    }
  }

  int n_;
  std::vector<Level> levels_;
};

Integer factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k)
    f *= k;
  return f;
}

} // namespace

bool is_transitive(std::span<const Perm> gens) {
  int n = degree_of(gens);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto &g : gens) {
      int y = g(x);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

bool is_primitive(std::span<const Perm> gens) {
  int n = degree_of(gens);
  if (!is_transitive(gens))
    return false;
  for (int b = 1; b < n; ++b)
    if (!block_is_trivial(gens, n, b))
      return false;
  return true;
}

Integer group_order(std::span<const Perm> gens) {
  int n = degree_of(gens);
  return StabilizerChain(n, gens).order();
}

GeneratedGroup generation_test_by_order(std::span<const Perm> gens) {
  int n = degree_of(gens);
  Integer order = group_order(gens);
  Integer full = factorial(n);
  if (order == full)
    return GeneratedGroup::Sn;
  if (n >= 2 && order * 2 == full)
    return GeneratedGroup::An;
  if (n == 1)
    return GeneratedGroup::Sn;
  return GeneratedGroup::other;
}

GeneratedGroup generation_test(std::span<const Perm> gens) {
  int n = degree_of(gens);
  if (n < 8)
    return generation_test_by_order(gens);
  if (!is_transitive(gens) || !is_primitive(gens))
    return GeneratedGroup::other;
  bool odd = std::any_of(gens.begin(), gens.end(), [](const Perm &g) { return g.sign() < 0; });
  const GeneratedGroup full = odd ? GeneratedGroup::Sn : GeneratedGroup::An;

  // short words: generators, pairwise products and a few longer products
  std::vector<Perm> words(gens.begin(), gens.end());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (i != j) {
        words.push_back(gens[i] * gens[j]);
        words.push_back(gens[i] * gens[j] * gens[j]);
        words.push_back(gens[i] * gens[i] * gens[j]);
        words.push_back(gens[i] * gens[j] * gens[i] * gens[j].inverse());
        words.push_back(gens[i] * gens[j] * gens[j] * gens[i] * gens[j]);
      }
  for (const auto &w : words)
    if (has_jordan_certificate(w, n))
      return full;
  return generation_test_by_order(gens);
}

std::vector<Perm> canonical_form(std::span<const Perm> tuple) {
  int n = degree_of(tuple);
  std::vector<int> best;
  std::vector<int> label(static_cast<std::size_t>(n)), order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<int> flat(tuple.size() * static_cast<std::size_t>(n));
  for (int start = 0; start < n; ++start) {
    std::fill(label.begin(), label.end(), -1);
    order.clear();
    label[static_cast<std::size_t>(start)] = 0;
    order.push_back(start);
    for (std::size_t head = 0; head < order.size(); ++head)
      for (const auto &g : tuple) {
        int y = g(order[head]);
        if (label[static_cast<std::size_t>(y)] < 0) {
          label[static_cast<std::size_t>(y)] = static_cast<int>(order.size());
          order.push_back(y);
        }
      }
    if (static_cast<int>(order.size()) != n)
      fail(Errc::domain, "canonical form needs a transitive tuple");
    for (std::size_t k = 0; k < tuple.size(); ++k)
      for (int x = 0; x < n; ++x)
        flat[k * static_cast<std::size_t>(n) + static_cast<std::size_t>(x)] =
            label[static_cast<std::size_t>(tuple[k](order[static_cast<std::size_t>(x)]))];
    if (best.empty() || flat < best)
      best = flat;
  }
  std::vector<Perm> out;
  for (std::size_t k = 0; k < tuple.size(); ++k)
    out.emplace_back(std::vector<int>(best.begin() + static_cast<long>(k * n),
                                      best.begin() + static_cast<long>((k + 1) * n)));
  return out;
}

namespace {

bool extend_conjugator(std::span<const Perm> a, std::span<const Perm> b,
                       std::vector<int> &c, std::vector<bool> &used) {
  int n = static_cast<int>(c.size());
  int x = 0;
  while (x < n && c[static_cast<std::size_t>(x)] >= 0)
    ++x;
  if (x == n)
    return true;
  for (int y = 0; y < n; ++y) {
    if (used[static_cast<std::size_t>(y)])
      continue;
    // b_i = c^-1 a_i c  <=>  c(a_i(x)) = b_i(c(x))
    std::vector<int> trail;
    std::vector<std::pair<int, int>> queue{{x, y}};
    bool ok = true;
    while (ok && !queue.empty()) {
      auto [p, q] = queue.back();
      queue.pop_back();
      if (c[static_cast<std::size_t>(p)] >= 0) {
        ok = c[static_cast<std::size_t>(p)] == q;
        continue;
      }
      if (used[static_cast<std::size_t>(q)]) {
        ok = false;
        continue;
      }
      c[static_cast<std::size_t>(p)] = q;
      used[static_cast<std::size_t>(q)] = true;
      trail.push_back(p);
      for (std::size_t i = 0; i < a.size(); ++i)
        queue.emplace_back(a[i](p), b[i](q));
    }
    if (ok && extend_conjugator(a, b, c, used))
      return true;
    for (int p : trail) {
      used[static_cast<std::size_t>(c[static_cast<std::size_t>(p)])] = false;
      c[static_cast<std::size_t>(p)] = -1;
    }
  }
  return false;
}

} // namespace

std::optional<Perm> find_conjugator(std::span<const Perm> a, std::span<const Perm> b) {
  if (a.size() != b.size())
    fail(Errc::domain, "tuples of different length");
  int n = degree_of(a);
  if (degree_of(b) != n)
    fail(Errc::domain, "tuples of different degree");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (CycleType::of(a[i]) != CycleType::of(b[i]))
      return std::nullopt;
  std::vector<int> c(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  if (!extend_conjugator(a, b, c, used))
    return std::nullopt;
  return Perm(c);
}

std::vector<Perm> centralizer_generators(const Perm &p) {
  int n = p.degree();
  auto cycles = p.cycles();
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const auto &x, const auto &y) { return x.size() > y.size(); });
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto &c = cycles[i];
    if (c.size() > 1) {
      std::vector<int> img(static_cast<std::size_t>(n));
      std::iota(img.begin(), img.end(), 0);
      for (std::size_t k = 0; k < c.size(); ++k)
        img[static_cast<std::size_t>(c[k])] = c[(k + 1) % c.size()];
      gens.emplace_back(std::move(img));
    }
    if (i + 1 < cycles.size() && cycles[i + 1].size() == c.size()) {
      const auto &d = cycles[i + 1];
      std::vector<int> img(static_cast<std::size_t>(n));
      std::iota(img.begin(), img.end(), 0);
      for (std::size_t k = 0; k < c.size(); ++k) {
        img[static_cast<std::size_t>(c[k])] = d[k];
        img[static_cast<std::size_t>(d[k])] = c[k];
      }
      gens.emplace_back(std::move(img));
    }
  }
  if (gens.empty())
    gens.push_back(Perm::identity(n));
  return gens;
}

std::vector<std::vector<Perm>> conjugation_orbit(std::vector<Perm> x,
                                                 std::span<const Perm> gens) {
  std::set<std::vector<Perm>> seen{x};
  std::vector<std::vector<Perm>> orbit{x};
  for (std::size_t head = 0; head < orbit.size(); ++head)
    for (const auto &g : gens) {
      std::vector<Perm> y;
      for (const auto &p : orbit[head])
        y.push_back(p ^ g);
      if (seen.insert(y).second)
        orbit.push_back(std::move(y));
    }
  return orbit;
}

} // namespace ellsub
