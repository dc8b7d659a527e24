#include "ellsub/coverings/perm.hpp"

#include "ellsub/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace ellsub {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int x : img_) {
    if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)])
      fail(Errc::domain, "not a permutation");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>> &cycles) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto &c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) {
      int x = c[i] - 1, y = c[(i + 1) % c.size()] - 1;
      if (x < 0 || x >= n || y < 0 || y >= n)
        fail(Errc::domain, "cycle entry out of range 1.." + std::to_string(n));
      if (used[static_cast<std::size_t>(x)])
        fail(Errc::domain, "point " + std::to_string(x + 1) + " repeated in cycles");
      used[static_cast<std::size_t>(x)] = true;
      img[static_cast<std::size_t>(x)] = y;
    }
  return Perm(std::move(img));
}

Perm Perm::parse(int n, std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && text[i] == ' ')
      ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(')
      fail(Errc::domain, "malformed permutation: '" + std::string(text) + "'");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      int value = 0;
      auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc())
        fail(Errc::domain, "malformed permutation: '" + std::string(text) + "'");
      cycle.push_back(value);
      i = static_cast<std::size_t>(end - text.data());
      skip();
      if (i < text.size() && text[i] == ',')
        ++i;
    }
    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
    skip();
  }
  return from_cycles(n, cycles);
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x)
    inv[static_cast<std::size_t>(img_[x])] = static_cast<int>(x);
  Perm p;
  p.img_ = std::move(inv);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != static_cast<int>(x))
      return false;
  return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)])
      continue;
    std::vector<int> c;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

int Perm::sign() const {
  int s = 1;
  for (const auto &c : cycles())
    if (c.size() % 2 == 0)
      s = -s;
  return s;
}

Perm operator*(const Perm &p, const Perm &q) {
  if (p.degree() != q.degree())
    fail(Errc::domain, "permutation degrees differ");
  std::vector<int> img(p.img_.size());
  for (std::size_t x = 0; x < img.size(); ++x)
    img[x] = q(p.img_[x]);
  Perm r;
  r.img_ = std::move(img);
  return r;
}

Perm pow(const Perm &p, int e) {
  Perm base = e < 0 ? p.inverse() : p;
  Perm out = Perm::identity(p.degree());
  for (unsigned k = static_cast<unsigned>(e < 0 ? -e : e); k; k >>= 1) {
    if (k & 1)
      out = out * base;
    base = base * base;
  }
  return out;
}

std::string Perm::to_string() const {
  std::string s;
  for (const auto &c : cycles()) {
    if (c.size() < 2)
      continue;
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i)
        s += ',';
      s += std::to_string(c[i] + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int k : parts_)
    if (k < 1)
      fail(Errc::domain, "cycle type parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

CycleType CycleType::of(const Perm &p) {
  std::vector<int> parts;
  for (const auto &c : p.cycles())
    parts.push_back(static_cast<int>(c.size()));
  return CycleType(std::move(parts));
}

CycleType CycleType::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == ',') {
      ++i;
      continue;
    }
    int value = 0;
    auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc())
      fail(Errc::domain, "malformed cycle type: '" + std::string(text) + "'");
    parts.push_back(value);
    i = static_cast<std::size_t>(end - text.data());
  }
  return CycleType(std::move(parts));
}

int CycleType::degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int CycleType::count(int length) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), length));
}

std::uint64_t CycleType::centralizer_order() const {
  // prod over lengths k of k^m_k m_k!
  std::uint64_t z = 1;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i])
      ++j;
    for (std::size_t m = 1; m <= j - i; ++m)
      z *= static_cast<std::uint64_t>(parts_[i]) * m;
    i = j;
  }
  return z;
}

int CycleType::sign() const {
  int s = 1;
  for (int k : parts_)
    if (k % 2 == 0)
      s = -s;
  return s;
}

std::string CycleType::to_string() const {
  std::string s;
  for (int k : parts_) {
    if (!s.empty())
      s += ' ';
    s += std::to_string(k);
  }
  return s;
}

int index(const Perm &p) { return p.degree() - static_cast<int>(p.cycles().size()); }

Perm canonical_element(const CycleType &t) {
  std::vector<int> img(static_cast<std::size_t>(t.degree()));
  int start = 0;
  for (int k : t.parts()) {
    for (int i = 0; i < k; ++i)
      img[static_cast<std::size_t>(start + i)] = start + (i + 1) % k;
    start += k;
  }
  return Perm(std::move(img));
}

} // namespace ellsub
