#include "cli.hpp"

#include "ellsub/autgroup.hpp"
#include "ellsub/coverings/characters.hpp"
#include "ellsub/coverings/search.hpp"
#include "ellsub/elliptic_locus.hpp"
#include "ellsub/error.hpp"
#include "ellsub/exact/poly_data.hpp"
#include "ellsub/identities.hpp"
#include "ellsub/igusa.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <sstream>

namespace ellsub::cli {

namespace {

using nlohmann::json;

std::vector<std::string> words(const std::string &text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string w; in >> w;)
    out.push_back(w);
  return out;
}

std::vector<Rational> rationals(const std::string &text, std::size_t min, std::size_t max,
                                const std::string &what) {
  auto w = words(text);
  if (w.size() < min || w.size() > max)
    fail(Errc::domain, what + " needs " +
                           (min == max ? std::to_string(min) : std::to_string(min) + " to " + std::to_string(max)) +
                           " rationals, got " + std::to_string(w.size()));
  std::vector<Rational> out;
  for (const auto &s : w)
    out.push_back(parse_rational(s));
  return out;
}

UVPoint parse_uv(const std::string &text) {
  auto r = rationals(text, 2, 2, "--uv");
  return {r[0], r[1]};
}

IgusaInvariants parse_igusa(const std::string &text) {
  auto r = rationals(text, 4, 4, "--igusa");
  return {r[0], r[1], r[2], r[3]};
}

BranchSet parse_points(const std::string &text) {
  auto w = words(text);
  if (w.size() != 6)
    fail(Errc::domain, "--points needs 6 entries (rationals or inf), got " + std::to_string(w.size()));
  BranchSet b;
  for (std::size_t i = 0; i < 6; ++i)
    b.points[i] = parse_proj_point(w[i]);
  require_distinct(b);
  return b;
}

json str(const Rational &q) { return to_string(q); }

json to_json(const UVPoint &p) { return {{"u", str(p.u)}, {"v", str(p.v)}}; }

json to_json(const IgusaInvariants &j) {
  return {{"J2", str(j.J2)}, {"J4", str(j.J4)}, {"J6", str(j.J6)}, {"J10", str(j.J10)}};
}

json to_json(const JPair &jp) {
  json j{{"e1", str(jp.e1)}, {"e2", str(jp.e2)}};
  j["split"] = jp.split ? json::array({str(jp.split->first), str(jp.split->second)}) : json(nullptr);
  return j;
}

json to_json(const IdentityRecord &r) {
  return {{"suite", r.suite}, {"formula", r.formula}, {"samples", r.samples},
          {"checked", r.checked}, {"passed", r.passed},   {"detail", r.detail}};
}

json to_json(const MultiPolyTable &t) {
  json terms = json::array();
  for (const auto &[e, c] : t.terms())
    terms.push_back({{"exponents", e}, {"coeff", str(c)}});
  return terms;
}

std::string seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s;
  return os.str();
}

json classification(AutGroup g, const std::vector<UVPoint> &pre) {
  json p = json::array();
  for (const auto &q : pre)
    p.push_back(to_json(q));
  return {{"group", std::string(to_string(g))},
          {"involution_classes", involution_class_count(g)},
          {"uv_preimages", p}};
}

int default_threads() {
  if (const char *env = std::getenv("ELLSUB_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0)
        return n;
    } catch (const std::exception &) {
    }
  }
  return 1;
}

// One sextic / uv / igusa / points source; exactly one must be given.
struct Source {
  std::string sextic, uv, igusa, points;

  void add(CLI::App *cmd, bool with_uv, bool with_igusa, bool with_points) {
    auto *group = cmd->add_option_group("input");
    group->add_option("--sextic", sextic, "coefficients a0 ... a6 of a0 + a1 X + ... + a6 X^6");
    if (with_uv)
      group->add_option("--uv", uv, "u v");
    if (with_igusa)
      group->add_option("--igusa", igusa, "J2 J4 J6 J10");
    if (with_points)
      group->add_option("--points", points, "six branch points, rationals or inf");
    group->require_option(1);
  }
};

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact invariants of genus-2 curves with elliptic subfields, and symmetric branch-cycle tuples", "ellsub"};
  app.require_subcommand(1);
  int threads = default_threads();
  app.add_option("--threads", threads, "worker threads for the tuple search (default: ELLSUB_THREADS or 1)")
      ->check(CLI::PositiveNumber);

  std::function<json()> action;
  bool lines = false; // JSON lines instead of one object
  int status = ok;

  Source src;

  auto *igusa = app.add_subcommand("igusa", "classical invariants J2, J4, J6, J10");
  src.add(igusa, true, false, false);
  igusa->callback([&] {
    action = [&] {
      IgusaInvariants inv = !src.sextic.empty() ? igusa_invariants(parse_sextic(src.sextic))
                                                : igusa_from_uv(parse_uv(src.uv));
      json j = to_json(inv);
      if (inv.J2 != 0) {
        auto a = absolute_invariants(inv);
        j["absolute"] = {{"i1", str(a.i1)}, {"i2", str(a.i2)}, {"i3", str(a.i3)}};
      }
      return j;
    };
  });

  std::string s_text;
  auto *uv = app.add_subcommand("uv", "(u, v) from the normal form Y^2 = X^6 - s1 X^4 + s2 X^2 - 1");
  uv->add_option("--s", s_text, "s1 s2 [s3]")->required();
  uv->callback([&] {
    action = [&] {
      auto r = rationals(s_text, 2, 3, "--s");
      UVPoint p = uv_from_s(r[0], r[1], r.size() == 3 ? r[2] : Rational(1));
      json j = to_json(p);
      j["delta"] = str(delta(p));
      return j;
    };
  });

  std::string uv_text;
  auto *jpair = app.add_subcommand("jpair", "j-invariants of the two elliptic subfields");
  jpair->add_option("--uv", uv_text, "u v")->required();
  jpair->callback([&] {
    action = [&] {
      UVPoint p = parse_uv(uv_text);
      json j = to_json(jpair_from_uv(p));
      j["discriminant"] = str(jpair_discriminant(p));
      return j;
    };
  });

  auto *classify = app.add_subcommand("classify", "automorphism group and elliptic involution classes");
  Source csrc;
  csrc.add(classify, true, false, false);
  classify->callback([&] {
    action = [&] {
      if (!csrc.uv.empty()) {
        UVPoint p = parse_uv(csrc.uv);
        return classification(classify_uv(p), {p});
      }
      auto c = classify_sextic(parse_sextic(csrc.sextic));
      return classification(c.group, c.preimages);
    };
  });

  auto *l2 = app.add_subcommand("l2", "membership in the locus of curves with a degree-2 elliptic subfield");
  Source lsrc;
  lsrc.add(l2, false, true, true);
  l2->callback([&] {
    action = [&] {
      json j;
      IgusaInvariants inv;
      if (!lsrc.points.empty()) {
        BranchSet b = parse_points(lsrc.points);
        json zero = json::array();
        for (const auto &c : elliptic_pairings(b))
          if (c.det == 0) {
            json pairs = json::array();
            for (auto [p, q] : c.pairing)
              pairs.push_back({to_string(b.points[static_cast<std::size_t>(p)]),
                               to_string(b.points[static_cast<std::size_t>(q)])});
            zero.push_back(pairs);
          }
        j["involution_pairings"] = zero;
        j["has_elliptic_involution"] = !zero.empty();
        inv = igusa_invariants(sextic_from_branch_set(b));
      } else {
        inv = !lsrc.sextic.empty() ? igusa_invariants(parse_sextic(lsrc.sextic)) : parse_igusa(lsrc.igusa);
      }
      Rational value = l2_equation(inv);
      j["value"] = str(value);
      j["on_locus"] = value == 0;
      return j;
    };
  });

  auto *invert = app.add_subcommand("invert", "all rational (u, v) with the given invariants");
  Source isrc;
  isrc.add(invert, false, true, false);
  invert->callback([&] {
    action = [&] {
      IgusaInvariants inv =
          !isrc.sextic.empty() ? igusa_invariants(parse_sextic(isrc.sextic)) : parse_igusa(isrc.igusa);
      json pre = json::array();
      for (const auto &p : uv_from_igusa(inv))
        pre.push_back(to_json(p));
      return json{{"preimages", pre}};
    };
  });

  std::string j_text;
  auto *embed = app.add_subcommand("embed", "genus-2 curve whose two elliptic subfields both have j-invariant j");
  embed->add_option("--j", j_text, "j-invariant")->required();
  embed->callback([&] {
    action = [&] {
      Rational j = parse_rational(j_text);
      json out = to_json(m1_embedding(j));
      out["uv"] = to_json(equal_j_family(j));
      return out;
    };
  });

  auto *tuples = app.add_subcommand("tuples", "branch-cycle tuples");
  tuples->require_subcommand(1);

  int case_id = 0, degree = 0, workers = 0;
  std::string mode = "exhaustive", checkpoint, tau_text;
  std::uint64_t budget = 1'000'000, seed = 1, target = 0;
  auto *count = tuples->add_subcommand("count", "classes of symmetric tuples via the triple parameterization");
  count->add_option("--case", case_id, "1, 2, 4 or 5")->required()->check(CLI::Range(1, 5));
  count->add_option("--n", degree, "odd degree >= 7")->required();
  count->add_option("--mode", mode, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random", "randomized"}));
  count->add_option("--budget", budget, "random descents in random mode");
  count->add_option("--target", target, "random mode: stop once this many classes are found");
  count->add_option("--seed", seed, "random mode seed");
  count->add_option("--workers", workers, "worker threads (default: --threads)");
  count->add_option("--checkpoint", checkpoint, "JSON-lines file of finished work units");
  count->add_option("--tau", tau_text, "tau in cycle notation instead of the canonical one");
  count->callback([&] {
    action = [&] {
      SearchOptions o;
      o.mode = mode == "exhaustive" ? SearchMode::exhaustive : SearchMode::randomized;
      o.budget = budget;
      o.target = target;
      o.seed = seed;
      o.workers = workers > 0 ? workers : threads;
      o.checkpoint = checkpoint;
      if (!tau_text.empty())
        o.tau = Perm::parse(degree, tau_text);
      CaseId c = case_from_int(case_id);
      auto r = count_triple_classes(c, degree, o);
      json sizes = json::array(), reps = json::array();
      for (const auto &orb : r.orbits) {
        sizes.push_back(orb.size);
        reps.push_back({{"sigma", orb.sigma.to_string()}, {"group", std::string(to_string(orb.group))}});
      }
      Integer sc = structure_constant(r.types.sigma, r.types.rho, r.types.tau);
      json j{{"case", case_id},
             {"n", degree},
             {"mode", std::string(to_string(r.mode))},
             {"count", r.count},
             {"count_sn", r.count_sn},
             {"count_an", r.count_an},
             {"complete", r.complete},
             {"orbit_sizes", sizes},
             {"representatives", reps},
             {"tau", r.tau.to_string()},
             {"types",
              {{"sigma", r.types.sigma.to_string()}, {"tau", r.types.tau.to_string()}, {"rho", r.types.rho.to_string()}}},
             {"centralizer_order", r.centralizer_order},
             {"structure_constant", sc.get_str()},
             {"elapsed", seconds(r.elapsed)}};
      if (r.mode == SearchMode::exhaustive) {
        j["candidates"] = r.candidates;
        j["non_generating"] = r.non_generating;
        j["certified"] = Integer(std::to_string(r.candidates)) == sc;
      } else {
        j["samples"] = r.samples;
      }
      return j;
    };
  });

  auto *census = tuples->add_subcommand("census", "all classes of case-1 tuples of degree n");
  census->add_option("--n", degree, "odd degree >= 7")->required();
  census->add_option("--workers", workers, "worker threads (default: --threads)");
  census->callback([&] {
    action = [&] {
      auto r = count_case1_tuple_classes(degree, workers > 0 ? workers : threads);
      return json{{"n", r.n},
                  {"count", r.count},
                  {"count_sn", r.count_sn},
                  {"count_an", r.count_an},
                  {"labeled", r.labeled},
                  {"labeled_total", r.labeled_total.get_str()},
                  {"symmetric", r.symmetric},
                  {"elapsed", seconds(r.elapsed)}};
    };
  });

  std::vector<std::string> perm_texts;
  auto *check = tuples->add_subcommand("check", "validate a tuple and test it for symmetry");
  check->add_option("--case", case_id, "1 to 5")->required()->check(CLI::Range(1, 5));
  check->add_option("--n", degree, "degree")->required();
  check->add_option("--perm", perm_texts, "tuple entries in cycle notation, in order")->required();
  check->callback([&] {
    action = [&] {
      BranchTuple t{case_from_int(case_id), {}};
      for (const auto &p : perm_texts)
        t.perms.push_back(Perm::parse(degree, p));
      auto c = check_tuple(t);
      json j{{"valid", c.valid}, {"group", std::string(to_string(c.group))}};
      if (!c.valid)
        j["failure"] = c.failure;
      if (c.valid && t.case_id != CaseId::case3) {
        json primed = json::array();
        for (const auto &p : primed_tuple(t).perms)
          primed.push_back(p.to_string());
        j["primed"] = primed;
        auto conj = is_symmetric(t);
        j["symmetric"] = conj.has_value();
        j["conjugator"] = conj ? json(conj->to_string()) : json(nullptr);
      }
      return j;
    };
  });

  std::string sigma_text;
  auto *translate = tuples->add_subcommand("translate", "symmetric tuple of a triple (sigma, tau)");
  translate->add_option("--case", case_id, "1, 2, 4 or 5")->required()->check(CLI::Range(1, 5));
  translate->add_option("--n", degree, "degree")->required();
  translate->add_option("--sigma", sigma_text, "sigma in cycle notation")->required();
  translate->add_option("--tau", tau_text, "tau in cycle notation")->required();
  translate->callback([&] {
    action = [&] {
      SymTriple tr = make_triple(case_from_int(case_id), Perm::parse(degree, sigma_text),
                                 Perm::parse(degree, tau_text));
      json perms = json::array();
      for (const auto &p : triple_to_tuple(tr).perms)
        perms.push_back(p.to_string());
      return json{{"rho", tr.rho.to_string()},
                  {"index_sum", index(tr.sigma) + index(tr.tau) + index(tr.rho)},
                  {"tuple", perms}};
    };
  });

  std::size_t samples = 50;
  auto *verify = app.add_subcommand("verify-identities", "run the exact identity suites (JSON lines)");
  verify->add_option("--samples", samples, "random points per suite");
  verify->add_option("--seed", seed, "seed");
  verify->callback([&] {
    lines = true;
    action = [&] {
      json all = json::array();
      for (const auto &r : verify_identities(samples, seed)) {
        if (!r.passed)
          status = identity_violation;
        all.push_back(to_json(r));
      }
      return all;
    };
  });

  std::string which;
  auto *reconstruct = app.add_subcommand("reconstruct", "rebuild a stored table from its defining conditions");
  reconstruct->add_option("table", which, "j6 or l2")->required()->check(CLI::IsMember({"j6", "l2"}));
  reconstruct->add_option("--seed", seed, "seed for the sample points");
  reconstruct->callback([&] {
    action = [&] {
      if (which == "j6") {
        auto r = reconstruct_j6(seed);
        MultiPolyTable diff(7);
        for (const auto &[e, c] : data::table(data::Table::j6_printed).terms())
          if (r.j6.coeff(e) != c)
            diff.add_term(e, c - r.j6.coeff(e));
        return json{{"table", "j6"},
                    {"invariant_dimension", r.invariant_dimension},
                    {"monomials", r.monomials},
                    {"matches_stored", r.j6 == data::table(data::Table::j6)},
                    {"terms", to_json(r.j6)},
                    {"printed_minus_rebuilt", to_json(diff)}};
      }
      auto r = reconstruct_l2_equation(seed);
      return json{{"table", "l2"},
                  {"nullity", r.nullity},
                  {"monomials", r.monomials},
                  {"points", r.points},
                  {"matches_stored", r.equation == data::table(data::Table::l2)},
                  {"terms", to_json(r.equation)},
                  {"printed_minus_rebuilt", to_json(r.diff)}};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    // prints help for --help, or the error with a usage hint
    return app.exit(e, out, err) == 0 ? ok : usage;
  }

  try {
    json result = action();
    if (lines)
      for (const auto &rec : result)
        out << rec.dump() << '\n';
    else
      out << result.dump(2) << '\n';
    return status;
  } catch (const Error &e) {
    err << json{{"error", errc_name(e.code())}, {"message", e.what()}}.dump() << '\n';
    return e.code() == Errc::identity_violation ? identity_violation : domain_error;
  }
}

} // namespace ellsub::cli
