#include "ellsub/exact/upoly.hpp"

#include "ellsub/error.hpp"

#include <algorithm>
#include <sstream>

namespace ellsub {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
  trim();
}

UniPoly UniPoly::constant(const Rational &c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational &c, int degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k > degree())
    return 0;
  return coeffs_[k];
}

const Rational &UniPoly::leading() const {
  if (is_zero())
    fail(Errc::domain, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::operator()(const Rational &x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (degree() < 1)
    return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero())
    return {};
  UniPoly r(*this);
  Rational inv = 1 / leading();
  return r *= inv;
}

UniPoly &UniPoly::operator+=(const UniPoly &o) {
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
    coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly &UniPoly::operator-=(const UniPoly &o) {
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
    coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly &UniPoly::operator*=(const UniPoly &o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

UniPoly &UniPoly::operator*=(const Rational &c) {
  for (auto &a : coeffs_)
    a *= c;
  trim();
  return *this;
}

std::string UniPoly::to_string(const char *var) const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational &c = coeffs_[k];
    if (c == 0)
      continue;
    if (!first)
      os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0)
      os << "-";
    Rational a = abs(c);
    if (a != 1 || k == 0)
      os << ellsub::to_string(a);
    if (k > 0)
      os << var;
    if (k > 1)
      os << "^" << k;
    first = false;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly &a, const UniPoly &b) {
  if (b.is_zero())
    fail(Errc::domain, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db)
    return {UniPoly(), a};
  std::vector<Rational> quo(a.degree() - db + 1);
  Rational inv = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k] == 0)
      continue;
    Rational f = rem[k] * inv;
    quo[k - db] = f;
    for (int j = 0; j <= db; ++j)
      rem[k - db + j] -= f * b.coeffs()[j];
  }
  rem.resize(db);
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<Integer> clear_denominators(const UniPoly &p) {
  std::vector<Integer> out;
  if (p.is_zero())
    return out;
  Integer l(1);
  for (const auto &c : p.coeffs())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer g(0);
  out.reserve(p.coeffs().size());
  for (const auto &c : p.coeffs()) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (sgn(out.back()) < 0)
    g = -g;
  for (auto &v : out)
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return out;
}

namespace {

// Fraction-free Gaussian elimination; exact divisions by the previous pivot.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0)
    return 1;
  Integer prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0)
        ++r;
      if (r == n)
        return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Integer det = m[n - 1][n - 1];
  return sign < 0 ? Integer(-det) : det;
}

} // namespace

Rational resultant(const UniPoly &f, const UniPoly &g) {
  if (f.is_zero() || g.is_zero())
    fail(Errc::domain, "resultant of a zero polynomial");
  const int m = f.degree(), n = g.degree();
  if (m == 0)
    return pow(f.leading(), static_cast<unsigned>(n));
  if (n == 0)
    return pow(g.leading(), static_cast<unsigned>(m));

  std::vector<Integer> F = clear_denominators(f);
  std::vector<Integer> G = clear_denominators(g);
  // F = cf * f, G = cg * g
  Rational cf = Rational(F.back()) / f.leading();
  Rational cg = Rational(G.back()) / g.leading();

  const std::size_t N = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Integer>> syl(N, std::vector<Integer>(N, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k)
      syl[i][i + k] = F[m - k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k)
      syl[n + i][i + k] = G[n - k];

  Rational res(bareiss_determinant(std::move(syl)));
  res /= pow(cf, static_cast<unsigned>(n)) * pow(cg, static_cast<unsigned>(m));
  return res;
}

Rational discriminant(const UniPoly &f) {
  const int n = f.degree();
  if (n < 1)
    fail(Errc::domain, "discriminant needs degree >= 1");
  Rational r = resultant(f, f.derivative()) / f.leading();
  if ((n * (n - 1) / 2) % 2)
    r = -r;
  return r;
}

namespace {

std::vector<UniPoly> sturm_sequence(const UniPoly &p) {
  std::vector<UniPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    UniPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    seq.push_back(-r);
  }
  seq.pop_back();
  return seq;
}

int sign_variations(const std::vector<UniPoly> &seq, const Rational &x) {
  int count = 0, last = 0;
  for (const auto &q : seq) {
    int s = sgn(q(x));
    if (s == 0)
      continue;
    if (last != 0 && s != last)
      ++count;
    last = s;
  }
  return count;
}

} // namespace

std::vector<Rational> rational_roots(const UniPoly &p) {
  if (p.is_zero())
    fail(Errc::domain, "rational roots of the zero polynomial");
  std::vector<Rational> roots;

  std::vector<Rational> c = p.coeffs();
  if (c[0] == 0) {
    roots.emplace_back(0);
    std::size_t k = 0;
    while (c[k] == 0)
      ++k;
    c.erase(c.begin(), c.begin() + static_cast<long>(k));
  }
  UniPoly q(std::move(c));
  if (q.degree() < 1) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }

  // squarefree part: every root simple, so Sturm counts are exact
  UniPoly h = divmod(q, gcd(q, q.derivative())).first.monic();
  std::vector<Integer> H = clear_denominators(h);
  const Integer lead = H.back();

  // a rational root is m / lead for some integer m
  Rational bound(0);
  for (int k = 0; k < h.degree(); ++k)
    bound = std::max(bound, Rational(abs(h.coeffs()[k])));
  bound += 1;

  std::vector<UniPoly> seq = sturm_sequence(h);
  Rational step(1, lead);
  step.canonicalize();

  struct Interval {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::vector<Interval> stack;
  Rational lo = -bound - 1, hi = bound;
  stack.push_back({lo, hi, sign_variations(seq, lo), sign_variations(seq, hi)});
  while (!stack.empty()) {
    Interval iv = std::move(stack.back());
    stack.pop_back();
    if (iv.vlo - iv.vhi == 0)
      continue;
    if (iv.hi - iv.lo < step) {
      // at most one m / lead in (lo, hi]
      Rational scaled = iv.hi * lead;
      Integer m = scaled.get_num() / scaled.get_den(); // truncation
      if (sgn(scaled) < 0 && m * scaled.get_den() != scaled.get_num())
        m -= 1; // floor
      Rational cand(m, lead);
      cand.canonicalize();
      if (cand > iv.lo && h(cand) == 0)
        roots.push_back(cand);
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    int vmid = sign_variations(seq, mid);
    stack.push_back({iv.lo, mid, iv.vlo, vmid});
    stack.push_back({mid, iv.hi, vmid, iv.vhi});
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

} // namespace ellsub
