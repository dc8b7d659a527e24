#include "ellsub/coverings/tuples.hpp"

#include "ellsub/error.hpp"

#include <array>

namespace ellsub {

std::string_view to_string(CaseId c) {
  switch (c) {
  case CaseId::case1: return "case1";
  case CaseId::case2: return "case2";
  case CaseId::case3: return "case3";
  case CaseId::case4: return "case4";
  case CaseId::case5: return "case5";
  }
  return "?";
}

CaseId case_from_int(int k) {
  if (k < 1 || k > 5)
    fail(Errc::domain, "case must be 1..5, got " + std::to_string(k));
  return static_cast<CaseId>(k);
}

std::size_t tuple_length(CaseId c) { return c == CaseId::case1 ? 5 : 4; }

namespace {

void require_degree(int n) {
  if (n < 7 || n % 2 == 0)
    fail(Errc::domain, "degree must be odd and at least 7, got " + std::to_string(n));
}

// k parts of length `len`
void append(std::vector<int> &parts, int len, int k) {
  for (int i = 0; i < k; ++i)
    parts.push_back(len);
}

CycleType make_type(std::initializer_list<std::pair<int, int>> groups) {
  std::vector<int> parts;
  for (auto [len, k] : groups)
    append(parts, len, k);
  return CycleType(std::move(parts));
}

} // namespace

bool congruence_gate(CaseId c, int n) {
  require_degree(n);
  switch (c) {
  case CaseId::case1: return n % 3 != 1;
  case CaseId::case2: return n % 3 != 2;
  case CaseId::case3: return false;
  case CaseId::case4: return n % 4 == 3;
  case CaseId::case5: return n % 4 == 1;
  }
  return false;
}

void require_gate(CaseId c, int n) {
  if (!congruence_gate(c, n))
    fail(Errc::congruence, "congruence-excluded: " + std::string(to_string(c)) +
                               " has no symmetric tuples in degree " + std::to_string(n));
}

std::vector<CycleType> tuple_cycle_types(CaseId c, int n) {
  require_degree(n);
  const CycleType inv1 = make_type({{2, (n - 1) / 2}, {1, 1}});
  const CycleType inv3 = make_type({{2, (n - 3) / 2}, {1, 3}});
  switch (c) {
  case CaseId::case1:
    return {inv1, inv1, inv1, inv3, make_type({{2, 1}, {1, n - 2}})};
  case CaseId::case2:
    return {inv1, inv1, inv1, make_type({{4, 1}, {2, (n - 7) / 2}, {1, 3}})};
  case CaseId::case3:
    return {make_type({{4, 1}, {2, (n - 5) / 2}, {1, 1}}), inv1, inv1, inv3};
  case CaseId::case4:
    return {inv1, make_type({{3, 1}, {2, (n - 3) / 2}}), inv1, inv3};
  case CaseId::case5:
    return {inv1, inv1, inv1, make_type({{3, 1}, {2, (n - 5) / 2}, {1, 2}})};
  }
  return {};
}

TupleCheck check_tuple(const BranchTuple &t) {
  TupleCheck out;
  if (t.perms.size() != tuple_length(t.case_id))
    fail(Errc::domain, std::string(to_string(t.case_id)) + " tuples have length " +
                           std::to_string(tuple_length(t.case_id)));
  const int n = t.perms.front().degree();
  for (const auto &p : t.perms)
    if (p.degree() != n)
      fail(Errc::domain, "tuple entries act on different degrees");

  Perm prod = Perm::identity(n);
  for (const auto &p : t.perms)
    prod = prod * p;
  if (!prod.is_identity()) {
    out.failure = "product is not the identity";
    return out;
  }
  const auto types = tuple_cycle_types(t.case_id, n);
  for (std::size_t i = 0; i < types.size(); ++i)
    if (CycleType::of(t.perms[i]) != types[i]) {
      out.failure = "position " + std::to_string(i + 1) + " has cycle type " +
                    CycleType::of(t.perms[i]).to_string() + ", expected " +
                    types[i].to_string();
      return out;
    }
  if (!is_transitive(t.perms)) {
    out.failure = "not transitive";
    return out;
  }
  out.group = generation_test(t.perms);
  if (out.group == GeneratedGroup::other) {
    out.failure = "generates neither S_n nor A_n";
    return out;
  }
  out.valid = true;
  return out;
}

bool validate_tuple(const BranchTuple &t) { return check_tuple(t).valid; }

BranchTuple primed_tuple(const BranchTuple &t) {
  if (t.perms.size() != tuple_length(t.case_id))
    fail(Errc::domain, "wrong tuple length for " + std::string(to_string(t.case_id)));
  const auto &s = t.perms;
  BranchTuple out{t.case_id, {}};
  switch (t.case_id) {
  case CaseId::case1:
    out.perms = {s[1], s[2], s[3] * s[0] * s[3].inverse(), s[3],
                 s[0].inverse() * s[4] * s[0]};
    break;
  case CaseId::case2:
    out.perms = {s[1], s[2], s[0], s[0].inverse() * s[3] * s[0]};
    break;
  case CaseId::case4:
  case CaseId::case5:
    out.perms = {s[1] * s[2] * s[1].inverse(), s[1], s[0], s[0].inverse() * s[3] * s[0]};
    break;
  case CaseId::case3:
    fail(Errc::unsupported, "case3 has no coordinate-rotation formulas");
  }
  return out;
}

std::optional<Perm> is_symmetric(const BranchTuple &t) {
  return find_conjugator(t.perms, primed_tuple(t).perms);
}

TripleTypes triple_cycle_types(CaseId c, int n) {
  require_degree(n);
  std::vector<TripleTypes> solutions;
  // "at most one" choices are e, f in {0, 1}; the rest is filled by the
  // repeated length if it divides what remains
  auto fill = [](std::vector<int> fixed, int rep, int n) -> std::optional<CycleType> {
    int used = 0;
    for (int k : fixed)
      used += k;
    if (used > n || (n - used) % rep != 0)
      return std::nullopt;
    append(fixed, rep, (n - used) / rep);
    return CycleType(std::move(fixed));
  };
  const CycleType sigma = make_type({{2, (n - 1) / 2}, {1, 1}});
  for (int e = 0; e <= 1; ++e)
    for (int f = 0; f <= 1; ++f) {
      std::optional<CycleType> tau, rho;
      switch (c) {
      case CaseId::case1: {
        std::vector<int> r{2}, t{3};
        append(r, 1, f);
        append(t, 2, e);
        rho = fill(r, 3, n);
        tau = fill(t, 6, n);
        break;
      }
      case CaseId::case2: {
        std::vector<int> t, r{4, 3};
        append(t, 1, f);
        append(r, 2, e);
        tau = fill(t, 3, n);
        rho = fill(r, 6, n);
        break;
      }
      case CaseId::case4:
        if (e || f)
          continue;
        rho = fill({2, 1}, 4, n);
        tau = fill({3}, 4, n);
        break;
      case CaseId::case5:
        if (e || f)
          continue;
        rho = fill({3, 2}, 4, n);
        tau = fill({1}, 4, n);
        break;
      case CaseId::case3:
        fail(Errc::unsupported, "case3 has no triple parameterization");
      }
      if (tau && rho)
        solutions.push_back({sigma, *tau, *rho});
    }
  if (solutions.empty())
    fail(Errc::congruence, "congruence-excluded: no cycle types of " +
                               std::string(to_string(c)) + " sum to " + std::to_string(n));
  if (solutions.size() > 1)
    fail(Errc::internal, "ambiguous triple cycle types");
  return solutions.front();
}

SymTriple make_triple(CaseId c, const Perm &sigma, const Perm &tau) {
  return SymTriple{c, sigma, tau, sigma * tau.inverse()};
}

TupleCheck check_triple(const SymTriple &tr) {
  TupleCheck out;
  const int n = tr.sigma.degree();
  if (tr.tau.degree() != n || tr.rho.degree() != n)
    fail(Errc::domain, "triple entries act on different degrees");
  if (tr.rho * tr.tau != tr.sigma) {
    out.failure = "rho * tau != sigma";
    return out;
  }
  const TripleTypes types = triple_cycle_types(tr.case_id, n);
  const std::array<std::pair<const char *, std::pair<const Perm *, const CycleType *>>, 3> checks{
      {{"sigma", {&tr.sigma, &types.sigma}},
       {"tau", {&tr.tau, &types.tau}},
       {"rho", {&tr.rho, &types.rho}}}};
  for (const auto &[name, pc] : checks)
    if (CycleType::of(*pc.first) != *pc.second) {
      out.failure = std::string(name) + " has cycle type " + CycleType::of(*pc.first).to_string() +
                    ", expected " + pc.second->to_string();
      return out;
    }
  const std::array<Perm, 2> gens{tr.sigma, tr.tau};
  out.group = generation_test(gens);
  if (out.group == GeneratedGroup::other) {
    out.failure = "sigma, tau generate neither S_n nor A_n";
    return out;
  }
  out.valid = true;
  return out;
}

BranchTuple triple_to_tuple(const SymTriple &tr) {
  if (tr.case_id == CaseId::case3)
    fail(Errc::unsupported, "case3 has no triple parameterization");
  auto tc = check_triple(tr);
  if (!tc.valid)
    fail(Errc::certificate, "invalid triple: " + tc.failure);
  const Perm &s = tr.sigma, &t = tr.tau, &r = tr.rho;
  BranchTuple out{tr.case_id, {}};
  switch (tr.case_id) {
  case CaseId::case1:
    out.perms = {s, s ^ t, s ^ pow(t, 2), pow(t, 3), pow(r, 3)};
    break;
  case CaseId::case2:
    out.perms = {s, s ^ t, s ^ pow(t, 2), pow(r, -3)};
    break;
  case CaseId::case4:
  case CaseId::case5:
    out.perms = {s, pow(t, -2), s ^ t.inverse(), pow(r, -2)};
    break;
  case CaseId::case3:
    break;
  }
  auto check = check_tuple(out);
  if (!check.valid)
    fail(Errc::certificate, "translated tuple invalid: " + check.failure);
  auto primed = primed_tuple(out);
  for (std::size_t i = 0; i < out.perms.size(); ++i)
    if (primed.perms[i] != (out.perms[i] ^ t))
      fail(Errc::certificate, "translated tuple is not symmetric under tau at position " +
                                  std::to_string(i + 1));
  return out;
}

} // namespace ellsub
