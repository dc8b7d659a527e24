#include "doctest.h"

#include "ellsub/coverings/characters.hpp"
#include "ellsub/coverings/search.hpp"
#include "ellsub/error.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>

using namespace ellsub;

namespace {

Errc code_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  return Errc::internal;
}

Perm random_perm(int n, std::mt19937_64 &rng) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(img);
}

// Involution with exactly one fixed point.
Perm random_involution(int n, std::mt19937_64 &rng) {
  std::vector<int> pts(static_cast<std::size_t>(n));
  std::iota(pts.begin(), pts.end(), 0);
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<int> img(static_cast<std::size_t>(n));
  img[static_cast<std::size_t>(pts[0])] = pts[0];
  for (std::size_t i = 1; i + 1 < pts.size(); i += 2) {
    img[static_cast<std::size_t>(pts[i])] = pts[i + 1];
    img[static_cast<std::size_t>(pts[i + 1])] = pts[i];
  }
  return Perm(img);
}

// Valid case-1 tuples of degree 7 by rejection sampling.
std::vector<BranchTuple> random_case1_tuples(int count, std::mt19937_64 &rng) {
  const int n = 7;
  std::vector<BranchTuple> out;
  while (static_cast<int>(out.size()) < count) {
    Perm s1 = random_involution(n, rng), s2 = random_involution(n, rng),
         s3 = random_involution(n, rng);
    int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
    if (a == b)
      continue;
    Perm s5 = Perm::from_cycles(n, {{a + 1, b + 1}});
    Perm s4 = (s1 * s2 * s3).inverse() * s5.inverse();
    BranchTuple t{CaseId::case1, {s1, s2, s3, s4, s5}};
    if (validate_tuple(t))
      out.push_back(t);
  }
  return out;
}

BranchTuple conjugated(const BranchTuple &t, const Perm &c) {
  BranchTuple out{t.case_id, {}};
  for (const auto &p : t.perms)
    out.perms.push_back(p ^ c);
  return out;
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do
    out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<SymTriple> found_triples(CaseId c, int n) {
  auto r = count_triple_classes(c, n);
  std::vector<SymTriple> out;
  for (const auto &o : r.orbits)
    out.push_back(make_triple(c, o.sigma, r.tau));
  return out;
}

} // namespace

TEST_CASE("perm basics") {
  Perm p = Perm::parse(5, "(1,2,3)(4,5)");
  CHECK(p.to_string() == "(1,2,3)(4,5)");
  CHECK(p(0) == 1);
  CHECK(pow(p, 6).is_identity());
  CHECK(p.sign() == -1);
  CHECK(CycleType::of(p) == CycleType({3, 2}));
  Perm q = Perm::parse(5, "(1,4)");
  // left to right: (p * q)(x) = q(p(x))
  CHECK((p * q)(0) == q(p(0)));
  CHECK((p ^ q) == q.inverse() * p * q);
  CHECK(Perm::identity(4).to_string() == "()");
  CHECK(code_of([] { Perm({0, 0, 1}); }) == Errc::domain);
  CHECK(CycleType::parse("3,3,1").centralizer_order() == 18);
  CHECK(CycleType::of(canonical_element(CycleType({4, 3}))) == CycleType({4, 3}));
}

TEST_CASE("index") {
  CHECK(index(Perm::identity(7)) == 0);
  CHECK(index(Perm::parse(7, "(1,2,3,4,5,6,7)")) == 6);
  CHECK(index(Perm::parse(7, "(1,2)(3,4)(5,6)")) == 3);
}

TEST_CASE("congruence gate") {
  CHECK_FALSE(congruence_gate(CaseId::case1, 7));
  CHECK(congruence_gate(CaseId::case4, 7));
  CHECK(congruence_gate(CaseId::case5, 9));
  CHECK(congruence_gate(CaseId::case2, 7));
  CHECK_FALSE(congruence_gate(CaseId::case2, 11));
  CHECK_FALSE(congruence_gate(CaseId::case4, 9));
  CHECK_FALSE(congruence_gate(CaseId::case3, 9));
  CHECK(code_of([] { congruence_gate(CaseId::case1, 8); }) == Errc::domain);
  CHECK(code_of([] { congruence_gate(CaseId::case1, 5); }) == Errc::domain);
  CHECK(code_of([] { count_triple_classes(CaseId::case1, 7); }) == Errc::congruence);
  CHECK(code_of([] { count_triple_classes(CaseId::case5, 11); }) == Errc::congruence);
}

TEST_CASE("generation test") {
  for (int n : {7, 8, 9, 12}) {
    std::vector<int> cyc(static_cast<std::size_t>(n));
    std::iota(cyc.begin(), cyc.end(), 1);
    const std::vector<Perm> gens{Perm::from_cycles(n, {cyc}), Perm::from_cycles(n, {{1, 2}})};
    CHECK(generation_test(gens) == GeneratedGroup::Sn);
  }
  const std::vector<Perm> small{Perm::parse(7, "(1,2,3)")};
  CHECK(generation_test(small) == GeneratedGroup::other);

  std::mt19937_64 rng(2520);
  std::vector<Perm> even;
  while (even.size() < 3) {
    Perm p = random_perm(7, rng);
    if (p.sign() == 1 && !p.is_identity())
      even.push_back(p);
  }
  CHECK(group_order(even) == 2520);
  CHECK(generation_test(even) == GeneratedGroup::An);

  // PSL(3,2) on the Fano plane, AGL(1,7), M11, M12
  const std::vector<Perm> psl{Perm::parse(7, "(1,2,3,4,5,6,7)"), Perm::parse(7, "(2,3,5)(4,7,6)"),
                              Perm::parse(7, "(2,4)(5,6)")};
  CHECK(group_order(psl) == 168);
  CHECK(generation_test(psl) == GeneratedGroup::other);
  const std::vector<Perm> agl{Perm::parse(7, "(1,2,3,4,5,6,7)"), Perm::parse(7, "(2,4,3,7,5,6)")};
  CHECK(group_order(agl) == 42);
  const std::vector<Perm> m11{Perm::parse(11, "(1,2,3,4,5,6,7,8,9,10,11)"),
                              Perm::parse(11, "(3,7,11,8)(4,10,5,6)")};
  CHECK(group_order(m11) == 7920);
  CHECK(generation_test(m11) == GeneratedGroup::other);
  const std::vector<Perm> m12{Perm::parse(12, "(1,2,3,4,5,6,7,8,9,10,11)"),
                              Perm::parse(12, "(3,7,11,8)(4,10,5,6)"),
                              Perm::parse(12, "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)")};
  CHECK(group_order(m12) == 95040);
  CHECK(generation_test(m12) == GeneratedGroup::other);
  CHECK(is_primitive(m12));
  const std::vector<Perm> blocks{Perm::parse(8, "(1,2,3,4,5,6,7,8)"), Perm::parse(8, "(1,5)")};
  CHECK(is_transitive(blocks));
  CHECK_FALSE(is_primitive(blocks));
  CHECK(generation_test(blocks) == GeneratedGroup::other);

  // the fast path and the stabilizer chain agree on random pairs
  for (int i = 0; i < 200; ++i) {
    int n = 7 + 2 * static_cast<int>(rng() % 4);
    const std::vector<Perm> g{random_involution(n, rng), pow(random_perm(n, rng), 1 + static_cast<int>(rng() % 3))};
    CHECK(generation_test(g) == generation_test_by_order(g));
  }
}

TEST_CASE("canonical form and conjugators") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const std::vector<Perm> t{random_perm(9, rng), random_perm(9, rng)};
    if (!is_transitive(t))
      continue;
    Perm c = random_perm(9, rng);
    const std::vector<Perm> u{t[0] ^ c, t[1] ^ c};
    CHECK(canonical_form(t) == canonical_form(u));
    auto found = find_conjugator(t, u);
    REQUIRE(found);
    CHECK((t[0] ^ *found) == u[0]);
    CHECK((t[1] ^ *found) == u[1]);
  }
  const std::vector<Perm> a{Perm::parse(5, "(1,2,3,4,5)")}, b{Perm::parse(5, "(1,2)")};
  CHECK_FALSE(find_conjugator(a, b));
}

TEST_CASE("structure constants") {
  CHECK(structure_constant(CycleType({2, 1}), CycleType({2, 1}), CycleType({3})) == 3);
  CHECK(character_degree({3, 1}) == 3);
  CHECK(class_size(CycleType({2, 2})) == 3);

  // brute force in S4 and S5 for every triple of classes
  for (int n : {4, 5}) {
    auto group = all_perms(n);
    std::vector<CycleType> types;
    for (const auto &p : partitions(n))
      types.emplace_back(std::vector<int>(p.begin(), p.end()));
    for (const auto &tc : types) {
      const Perm z = canonical_element(tc);
      for (const auto &ta : types)
        for (const auto &tb : types) {
          Integer brute = 0;
          for (const auto &x : group)
            if (CycleType::of(x) == ta && CycleType::of(x.inverse() * z) == tb)
              brute += 1;
          CHECK(structure_constant(ta, tb, tc) == brute);
        }
    }
  }
}

TEST_CASE("tuple validation") {
  std::mt19937_64 rng(168);
  auto tuples = random_case1_tuples(100, rng);
  for (const auto &t : tuples) {
    BranchTuple p = primed_tuple(t);
    CHECK(validate_tuple(p));
    // three rotations conjugate by s4
    CHECK(primed_tuple(primed_tuple(p)).perms == conjugated(t, t.perms[3].inverse()).perms);
    // no case-1 class of degree 7 is symmetric
    CHECK_FALSE(is_symmetric(t));
  }

  BranchTuple bad = tuples.front();
  std::swap(bad.perms[1], bad.perms[2]);
  if ((bad.perms[0] * bad.perms[1] * bad.perms[2] * bad.perms[3] * bad.perms[4]).is_identity())
    bad.perms[4] = Perm::parse(7, "(1,2,3)");
  CHECK_FALSE(validate_tuple(bad));

  BranchTuple three = tuples.front();
  three.perms[4] = Perm::parse(7, "(1,2,3)");
  three.perms[3] = (three.perms[0] * three.perms[1] * three.perms[2]).inverse() * three.perms[4].inverse();
  CHECK_FALSE(validate_tuple(three));
  CHECK(check_tuple(three).failure.find("type") != std::string::npos);

  BranchTuple shortt{CaseId::case1, {tuples.front().perms[0]}};
  CHECK(code_of([&] { check_tuple(shortt); }) == Errc::domain);
  BranchTuple c3{CaseId::case3, tuples.front().perms};
  c3.perms.pop_back();
  CHECK(code_of([&] { primed_tuple(c3); }) == Errc::unsupported);
}

TEST_CASE("triple cycle types") {
  auto t = triple_cycle_types(CaseId::case1, 9);
  CHECK(t.sigma == CycleType({2, 2, 2, 2, 1}));
  CHECK(t.tau == CycleType({6, 3}));
  CHECK(t.rho == CycleType({3, 3, 2, 1}));
  CHECK(triple_cycle_types(CaseId::case2, 7).rho == CycleType({4, 3}));
  CHECK(triple_cycle_types(CaseId::case4, 7).tau == CycleType({4, 3}));
  CHECK(triple_cycle_types(CaseId::case5, 9).tau == CycleType({4, 4, 1}));
  CHECK(code_of([] { triple_cycle_types(CaseId::case3, 9); }) == Errc::unsupported);
  CHECK(code_of([] { triple_cycle_types(CaseId::case1, 7); }) == Errc::congruence);
}

TEST_CASE("triples translate to symmetric tuples") {
  const std::vector<std::pair<CaseId, int>> cells{{CaseId::case1, 9},  {CaseId::case1, 11},
                                                  {CaseId::case2, 7},  {CaseId::case2, 13},
                                                  {CaseId::case4, 7},  {CaseId::case4, 11},
                                                  {CaseId::case5, 9},  {CaseId::case5, 13}};
  for (auto [c, n] : cells) {
    CAPTURE(static_cast<int>(c));
    CAPTURE(n);
    for (const auto &tr : found_triples(c, n)) {
      CHECK(check_triple(tr).valid);
      CHECK(index(tr.sigma) + index(tr.tau) + index(tr.rho) == 2 * (n - 1));
      BranchTuple t = triple_to_tuple(tr);
      CHECK(validate_tuple(t));
      CHECK(primed_tuple(t).perms == conjugated(t, tr.tau).perms);
      auto conj = is_symmetric(t);
      REQUIRE(conj);
      CHECK(primed_tuple(t).perms == conjugated(t, *conj).perms);
      // conjugated copies stay symmetric
      CHECK(is_symmetric(conjugated(t, Perm::parse(n, "(1,2,3)"))));
      if (c == CaseId::case1) {
        CHECK(CycleType::of(t.perms[4]) == CycleType::of(Perm::parse(n, "(1,2)")));
        CHECK(t.perms[3] == pow(tr.tau, 3));
      }
      if (c == CaseId::case2)
        CHECK(primed_tuple(primed_tuple(primed_tuple(t))).perms == t.perms);
      if (c == CaseId::case4 || c == CaseId::case5)
        CHECK(primed_tuple(primed_tuple(t)).perms == conjugated(t, t.perms[1].inverse()).perms);
    }
  }
  auto tr = found_triples(CaseId::case1, 9).front();
  // tau of type 6+3 cubes to three 2-cycles, the s4 condition of case 1
  CHECK(CycleType::of(triple_to_tuple(tr).perms[3]) == CycleType({2, 2, 2, 1, 1, 1}));
  CHECK(tuple_cycle_types(CaseId::case1, 9)[3] == CycleType({2, 2, 2, 1, 1, 1}));
  tr.sigma = Perm::parse(9, "(1,2,3)");
  CHECK(code_of([&] { triple_to_tuple(tr); }) == Errc::certificate);
}

TEST_CASE("table cells up to degree 13") {
  const std::vector<std::tuple<CaseId, int, int>> cells{
      {CaseId::case1, 9, 3},  {CaseId::case1, 11, 2}, {CaseId::case2, 7, 1},
      {CaseId::case2, 9, 0},  {CaseId::case2, 13, 2}, {CaseId::case4, 7, 2},
      {CaseId::case4, 11, 3}, {CaseId::case5, 9, 3},  {CaseId::case5, 13, 3}};
  for (auto [c, n, expected] : cells) {
    CAPTURE(n);
    auto r = count_triple_classes(c, n);
    CHECK(r.complete);
    CHECK(r.count == static_cast<std::uint64_t>(expected));
    CHECK(r.count == r.count_sn + r.count_an);
    CHECK(r.orbits.size() == r.count);
    for (const auto &o : r.orbits)
      CHECK(o.size == r.centralizer_order);
    CHECK(Integer(static_cast<unsigned long>(r.candidates)) ==
          structure_constant(r.types.sigma, r.types.rho, r.types.tau));
    if (c == CaseId::case1)
      CHECK(r.count_an == 0);
  }
  auto r47 = count_triple_classes(CaseId::case4, 7);
  CHECK(r47.candidates == 27);
  CHECK(r47.non_generating == 3);
}

TEST_CASE("counts do not depend on tau, workers or interruption") {
  std::mt19937_64 rng(4);
  auto base = count_triple_classes(CaseId::case5, 13);
  SearchOptions other;
  other.tau = base.tau ^ random_perm(13, rng);
  CHECK(count_triple_classes(CaseId::case5, 13, other).count == base.count);

  SearchOptions par;
  par.workers = 3;
  auto p = count_triple_classes(CaseId::case5, 13, par);
  CHECK(p.count == base.count);
  CHECK(p.candidates == base.candidates);
  REQUIRE(p.orbits.size() == base.orbits.size());
  for (std::size_t i = 0; i < p.orbits.size(); ++i)
    CHECK(p.orbits[i].sigma == base.orbits[i].sigma);

  const auto path = std::filesystem::temp_directory_path() / "ellsub_checkpoint_test.jsonl";
  std::filesystem::remove(path);
  SearchOptions ck;
  ck.checkpoint = path.string();
  auto first = count_triple_classes(CaseId::case5, 13, ck);
  CHECK(first.count == base.count);
  // keep half the records plus a torn line, then resume
  std::vector<std::string> lines;
  {
    std::ifstream in(path);
    for (std::string line; std::getline(in, line);)
      lines.push_back(line);
  }
  REQUIRE(lines.size() > 2);
  {
    std::ofstream out(path, std::ios::trunc);
    for (std::size_t i = 0; i < lines.size() / 2; ++i)
      out << lines[i] << '\n';
    out << lines.back().substr(0, lines.back().size() / 2) << '\n';
  }
  auto resumed = count_triple_classes(CaseId::case5, 13, ck);
  CHECK(resumed.count == base.count);
  CHECK(resumed.candidates == base.candidates);
  // a checkpoint from another search is refused
  CHECK(code_of([&] { count_triple_classes(CaseId::case4, 11, ck); }) == Errc::domain);
  std::filesystem::remove(path);
}

TEST_CASE("randomized mode") {
  SearchOptions opts;
  opts.mode = SearchMode::randomized;
  opts.budget = 20000;
  opts.seed = 9;
  auto a = count_triple_classes(CaseId::case4, 11, opts);
  CHECK_FALSE(a.complete);
  CHECK(a.count <= 3);
  CHECK(a.count >= 1);
  opts.workers = 2;
  auto b = count_triple_classes(CaseId::case4, 11, opts);
  CHECK(a.count == b.count);

  opts.target = 1;
  auto c = count_triple_classes(CaseId::case4, 11, opts);
  CHECK(c.count >= 1);
  CHECK(c.samples <= a.samples);
}

TEST_CASE("case-1 census of degree 7") {
  auto r = count_case1_tuple_classes(7);
  CHECK(r.count == 168);
  CHECK(r.count_an == 0);
  CHECK(r.symmetric == 0);
  CHECK(r.labeled_total == Integer(168) * 5040);
}
