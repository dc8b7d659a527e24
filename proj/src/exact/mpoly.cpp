#include "ellsub/exact/mpoly.hpp"

#include "ellsub/error.hpp"

#include <sstream>

namespace ellsub {

MultiPolyTable MultiPolyTable::parse(std::string_view text) {
  MultiPolyTable poly;
  bool sized = false;
  std::size_t lineno = 0;
  while (!text.empty()) {
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      if (line.find_first_not_of(" \t\r") != std::string_view::npos)
        fail(Errc::domain, "poly table line " + std::to_string(lineno) +
                               ": missing ':'");
      continue;
    }
    std::istringstream exps{std::string(line.substr(0, colon))};
    Exponents e;
    int x;
    while (exps >> x) {
      if (x < 0)
        fail(Errc::domain, "poly table line " + std::to_string(lineno) +
                               ": negative exponent");
      e.push_back(x);
    }
    if (!exps.eof())
      fail(Errc::domain, "poly table line " + std::to_string(lineno) +
                             ": bad exponent");
    std::istringstream coeff{std::string(line.substr(colon + 1))};
    std::string token, extra;
    coeff >> token;
    if (token.empty() || (coeff >> extra))
      fail(Errc::domain, "poly table line " + std::to_string(lineno) +
                             ": expected one coefficient");
    if (!sized) {
      poly.nvars_ = e.size();
      sized = true;
    } else if (e.size() != poly.nvars_) {
      fail(Errc::domain, "poly table line " + std::to_string(lineno) +
                             ": exponent vector length differs");
    }
    poly.add_term(e, parse_rational(token));
  }
  return poly;
}

void MultiPolyTable::add_term(const Exponents &e, const Rational &c) {
  if (e.size() != nvars_)
    fail(Errc::domain, "exponent vector length differs from table arity");
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Rational MultiPolyTable::coeff(const Exponents &e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPolyTable::weighted_degree(std::span<const int> weights) const {
  int best = -1;
  for (const auto &[e, c] : terms_) {
    int w = 0;
    for (std::size_t i = 0; i < nvars_; ++i)
      w += weights[i] * e[i];
    best = std::max(best, w);
  }
  return best;
}

bool MultiPolyTable::is_weighted_homogeneous(std::span<const int> weights) const {
  int target = -1;
  for (const auto &[e, c] : terms_) {
    int w = 0;
    for (std::size_t i = 0; i < nvars_; ++i)
      w += weights[i] * e[i];
    if (target < 0)
      target = w;
    else if (w != target)
      return false;
  }
  return true;
}

std::string MultiPolyTable::serialize() const {
  std::ostringstream os;
  // highest exponents first, as in the hand-written files
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (std::size_t i = 0; i < nvars_; ++i)
      os << (i ? " " : "") << it->first[i];
    os << " : " << to_string(it->second) << '\n';
  }
  return os.str();
}

} // namespace ellsub
