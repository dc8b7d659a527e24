#include "ellsub/coverings/search.hpp"

#include "ellsub/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <thread>

namespace ellsub {

std::string_view to_string(SearchMode m) {
  return m == SearchMode::exhaustive ? "exhaustive" : "randomized";
}

namespace {

constexpr int kMaxDegree = 32;
using Small = std::array<std::int8_t, kMaxDegree>;

struct FoundSigma {
  std::vector<int> sigma;
  GeneratedGroup group;
};

struct UnitResult {
  std::uint64_t candidates = 0;
  std::uint64_t non_generating = 0;
  std::vector<FoundSigma> found;
};

// Partial rho = tau^-1 o sigma as disjoint paths; endpoints carry the
// opposite endpoint and the path length.
struct PathState {
  Small sigma;
  Small other_end;
  Small len;
  std::array<std::int8_t, kMaxDegree + 1> remaining; // cycles of rho still to close
  int assigned = 0;
};

class TripleSearch {
public:
  TripleSearch(int n, const Perm &tau, const CycleType &rho_type)
      : n_(n), tau_(tau), maxlen_(rho_type.max_part()) {
    const Perm inv = tau.inverse();
    for (int x = 0; x < n; ++x)
      tau_inv_[static_cast<std::size_t>(x)] = static_cast<std::int8_t>(inv(x));
    target_.fill(0);
    for (int k : rho_type.parts())
      ++target_[static_cast<std::size_t>(k)];
  }

  // State after fixing sigma(r) = r.
  std::optional<PathState> root(int r) const {
    PathState s;
    s.sigma.fill(-1);
    for (int x = 0; x < n_; ++x) {
      s.other_end[static_cast<std::size_t>(x)] = static_cast<std::int8_t>(x);
      s.len[static_cast<std::size_t>(x)] = 1;
    }
    s.remaining = target_;
    s.sigma[static_cast<std::size_t>(r)] = static_cast<std::int8_t>(r);
    s.assigned = 1;
    if (!add_edge(s, r, tau_inv_[static_cast<std::size_t>(r)]))
      return std::nullopt;
    return s;
  }

  int choose(const PathState &s) const {
    int x = -1, best = -1;
    for (int i = 0; i < n_; ++i)
      if (s.sigma[static_cast<std::size_t>(i)] < 0 && s.len[static_cast<std::size_t>(i)] > best) {
        best = s.len[static_cast<std::size_t>(i)];
        x = i;
      }
    return x;
  }

  // sigma(x) = y and sigma(y) = x
  bool pair(PathState &s, int x, int y) const {
    s.sigma[static_cast<std::size_t>(x)] = static_cast<std::int8_t>(y);
    s.sigma[static_cast<std::size_t>(y)] = static_cast<std::int8_t>(x);
    s.assigned += 2;
    return add_edge(s, x, tau_inv_[static_cast<std::size_t>(y)]) &&
           add_edge(s, y, tau_inv_[static_cast<std::size_t>(x)]);
  }

  void run(const PathState &s, UnitResult &out) const {
    if (s.assigned == n_) {
      leaf(s, out);
      return;
    }
    const int x = choose(s);
    for (int y = 0; y < n_; ++y) {
      if (y == x || s.sigma[static_cast<std::size_t>(y)] >= 0)
        continue;
      PathState t = s;
      if (pair(t, x, y))
        run(t, out);
    }
  }

  void leaf(const PathState &s, UnitResult &out) const {
    ++out.candidates;
    std::vector<int> img(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
      img[static_cast<std::size_t>(i)] = s.sigma[static_cast<std::size_t>(i)];
    const std::array<Perm, 2> gens{Perm(img), tau_};
    GeneratedGroup g = generation_test(gens);
    if (g == GeneratedGroup::other)
      ++out.non_generating;
    else
      out.found.push_back({std::move(img), g});
  }

  // One random descent from a random fixed point, picking a uniformly random
  // feasible partner at each step; empty on a dead end.
  template <class Rng> std::optional<std::vector<int>> dive(Rng &rng) const {
    auto state = root(static_cast<int>(rng() % static_cast<std::uint64_t>(n_)));
    if (!state)
      return std::nullopt;
    PathState s = *state;
    std::vector<PathState> options;
    while (s.assigned < n_) {
      const int x = choose(s);
      options.clear();
      for (int y = 0; y < n_; ++y) {
        if (y == x || s.sigma[static_cast<std::size_t>(y)] >= 0)
          continue;
        PathState t = s;
        if (pair(t, x, y))
          options.push_back(t);
      }
      if (options.empty())
        return std::nullopt;
      s = options[static_cast<std::size_t>(rng() % options.size())];
    }
    std::vector<int> sigma(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
      sigma[static_cast<std::size_t>(i)] = s.sigma[static_cast<std::size_t>(i)];
    if (!rho_matches(sigma))
      fail(Errc::internal, "random descent produced rho of the wrong type");
    return sigma;
  }

  // Cycle type of rho for a complete sigma.
  bool rho_matches(const std::vector<int> &sigma) const {
    std::array<std::int8_t, kMaxDegree + 1> counts{};
    std::array<bool, kMaxDegree> seen{};
    for (int start = 0; start < n_; ++start) {
      if (seen[static_cast<std::size_t>(start)])
        continue;
      int len = 0;
      for (int x = start; !seen[static_cast<std::size_t>(x)];
           x = tau_inv_[static_cast<std::size_t>(sigma[static_cast<std::size_t>(x)])]) {
        seen[static_cast<std::size_t>(x)] = true;
        ++len;
      }
      if (len > maxlen_ || ++counts[static_cast<std::size_t>(len)] > target_[static_cast<std::size_t>(len)])
        return false;
    }
    return true;
  }

  const Perm &tau() const { return tau_; }

private:
  // rho(a) = b, a the tail of its path, b the head of its path
  bool add_edge(PathState &s, int a, int b) const {
    const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
    const int head = s.other_end[ua];
    if (head == b) {
      auto &r = s.remaining[static_cast<std::size_t>(s.len[ua])];
      if (r == 0)
        return false;
      --r;
      return true;
    }
    const int tail = s.other_end[ub];
    const int length = s.len[ua] + s.len[ub];
    if (length > maxlen_)
      return false;
    bool room = false;
    for (int k = length; k <= maxlen_ && !room; ++k)
      room = s.remaining[static_cast<std::size_t>(k)] > 0;
    if (!room)
      return false;
    s.other_end[static_cast<std::size_t>(head)] = static_cast<std::int8_t>(tail);
    s.other_end[static_cast<std::size_t>(tail)] = static_cast<std::int8_t>(head);
    s.len[static_cast<std::size_t>(head)] = static_cast<std::int8_t>(length);
    s.len[static_cast<std::size_t>(tail)] = static_cast<std::int8_t>(length);
    return true;
  }

  int n_;
  Perm tau_;
  int maxlen_;
  Small tau_inv_{};
  std::array<std::int8_t, kMaxDegree + 1> target_{};
};

std::vector<int> flat_key(const std::vector<Perm> &form) {
  std::vector<int> key;
  for (const auto &p : form)
    key.insert(key.end(), p.images().begin(), p.images().end());
  return key;
}

// Cent(tau) orbits on points: one per cycle length; (representative, size).
std::vector<std::pair<int, int>> fixed_point_orbits(const Perm &tau) {
  std::map<int, std::pair<int, int>> by_len;
  for (const auto &c : tau.cycles()) {
    auto len = static_cast<int>(c.size());
    auto [it, fresh] = by_len.try_emplace(len, c.front(), 0);
    it->second.first = std::min(it->second.first, *std::min_element(c.begin(), c.end()));
    it->second.second += len;
  }
  std::vector<std::pair<int, int>> out;
  for (auto it = by_len.rbegin(); it != by_len.rend(); ++it)
    out.push_back(it->second);
  return out;
}

// ---- checkpoint records ---------------------------------------------------

struct CheckpointHeader {
  CaseId c;
  int n;
  SearchMode mode;
  std::uint64_t seed;
  std::string tau;
};

nlohmann::json unit_record(const CheckpointHeader &h, std::size_t unit, const UnitResult &r) {
  nlohmann::json j;
  j["case"] = static_cast<int>(h.c);
  j["n"] = h.n;
  j["mode"] = std::string(to_string(h.mode));
  j["seed"] = h.seed;
  j["tau"] = h.tau;
  j["range_start"] = unit;
  j["range_end"] = unit + 1;
  j["candidates"] = r.candidates;
  j["non_generating"] = r.non_generating;
  nlohmann::json reps = nlohmann::json::array();
  for (const auto &f : r.found)
    reps.push_back({{"sigma", Perm(f.sigma).to_string()}, {"group", std::string(to_string(f.group))}});
  j["reps"] = std::move(reps);
  return j;
}

std::map<std::size_t, UnitResult> load_checkpoint(const std::string &path,
                                                   const CheckpointHeader &h) {
  std::map<std::size_t, UnitResult> done;
  std::ifstream in(path);
  if (!in)
    return done;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception &) {
      continue; // a torn last line from an interrupted run
    }
    if (j.value("case", 0) != static_cast<int>(h.c) || j.value("n", 0) != h.n ||
        j.value("mode", "") != to_string(h.mode) || j.value("seed", std::uint64_t{0}) != h.seed ||
        j.value("tau", "") != h.tau)
      fail(Errc::domain, "checkpoint " + path + " belongs to a different search");
    UnitResult r;
    r.candidates = j.at("candidates").get<std::uint64_t>();
    r.non_generating = j.at("non_generating").get<std::uint64_t>();
    for (const auto &rep : j.at("reps")) {
      Perm p = Perm::parse(h.n, rep.at("sigma").get<std::string>());
      auto g = rep.at("group").get<std::string>() == "Sn" ? GeneratedGroup::Sn : GeneratedGroup::An;
      r.found.push_back({p.images(), g});
    }
    for (auto u = j.at("range_start").get<std::size_t>(); u < j.at("range_end").get<std::size_t>(); ++u)
      done[u] = r;
  }
  return done;
}

// Runs `work(unit)` for units [0, count) on `workers` threads, skipping
// units present in `done`; `finished(unit, result)` is called under a lock.
template <class Work, class Finished>
void run_units(std::size_t count, int workers, const std::map<std::size_t, UnitResult> &done,
               Work work, Finished finished, const std::atomic<bool> &stop) {
  std::atomic<std::size_t> next{0};
  std::mutex lock;
  std::exception_ptr error;
  auto body = [&] {
    try {
      for (;;) {
        if (stop.load())
          return;
        std::size_t u = next.fetch_add(1);
        if (u >= count)
          return;
        UnitResult r;
        if (auto it = done.find(u); it != done.end())
          r = it->second;
        else
          r = work(u);
        std::lock_guard guard(lock);
        finished(u, std::move(r), done.count(u) != 0);
      }
    } catch (...) {
      std::lock_guard guard(lock);
      if (!error)
        error = std::current_exception();
    }
  };
  const int nthreads = std::max(1, workers);
  if (nthreads == 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i)
      pool.emplace_back(body);
    for (auto &t : pool)
      t.join();
  }
  if (error)
    std::rethrow_exception(error);
}

} // namespace

TripleCount count_triple_classes(CaseId c, int n, const SearchOptions &opts) {
  require_gate(c, n);
  if (n > kMaxDegree - 1)
    fail(Errc::domain, "degree too large for the search");
  const auto start_time = std::chrono::steady_clock::now();

  TripleCount out;
  out.case_id = c;
  out.n = n;
  out.mode = opts.mode;
  out.types = triple_cycle_types(c, n);
  out.tau = opts.tau ? *opts.tau : canonical_element(out.types.tau);
  if (out.tau.degree() != n || CycleType::of(out.tau) != out.types.tau)
    fail(Errc::domain, "tau must have cycle type " + out.types.tau.to_string());
  out.centralizer_order = out.types.tau.centralizer_order();

  const TripleSearch search(n, out.tau, out.types.rho);
  const auto fp_orbits = fixed_point_orbits(out.tau);
  const CheckpointHeader header{c, n, opts.mode, opts.mode == SearchMode::randomized ? opts.seed : 0,
                                out.tau.to_string()};
  const auto done = opts.checkpoint.empty() ? std::map<std::size_t, UnitResult>{}
                                            : load_checkpoint(opts.checkpoint, header);
  std::ofstream journal;
  if (!opts.checkpoint.empty()) {
    journal.open(opts.checkpoint, std::ios::app);
    if (!journal)
      fail(Errc::domain, "cannot open checkpoint file " + opts.checkpoint);
  }
  auto log_unit = [&](std::size_t u, const UnitResult &r, bool from_file) {
    if (journal.is_open() && !from_file)
      journal << unit_record(header, u, r).dump() << '\n' << std::flush;
  };

  // orbit bookkeeping shared by both modes
  std::map<std::vector<int>, OrbitRecord> orbits;
  std::map<std::vector<int>, std::set<std::vector<int>>> members;
  auto absorb = [&](const FoundSigma &f, std::uint64_t weight) {
    const std::array<Perm, 2> pair{Perm(f.sigma), out.tau};
    auto key = flat_key(canonical_form(pair));
    auto [it, fresh] = orbits.try_emplace(key, OrbitRecord{pair[0], 0, f.group});
    if (!fresh && pair[0] < it->second.sigma)
      it->second.sigma = pair[0];
    if (opts.mode == SearchMode::exhaustive)
      it->second.size += weight;
    else if (members[key].insert(f.sigma).second)
      ++it->second.size;
  };

  std::atomic<bool> stop{false};
  if (opts.mode == SearchMode::exhaustive) {
    // units: (fixed point representative, first partner)
    struct Unit {
      std::size_t orbit;
      PathState state;
    };
    std::vector<Unit> units;
    for (std::size_t o = 0; o < fp_orbits.size(); ++o) {
      auto root = search.root(fp_orbits[o].first);
      if (!root)
        continue;
      if (root->assigned == n) {
        units.push_back({o, *root});
        continue;
      }
      const int x = search.choose(*root);
      for (int y = 0; y < n; ++y) {
        if (y == x || root->sigma[static_cast<std::size_t>(y)] >= 0)
          continue;
        PathState t = *root;
        if (search.pair(t, x, y))
          units.push_back({o, t});
      }
    }
    std::vector<UnitResult> results(units.size());
    run_units(
        units.size(), opts.workers, done,
        [&](std::size_t u) {
          UnitResult r;
          search.run(units[u].state, r);
          return r;
        },
        [&](std::size_t u, UnitResult r, bool from_file) {
          log_unit(u, r, from_file);
          results[u] = std::move(r);
        },
        stop);
    for (std::size_t u = 0; u < units.size(); ++u) {
      const auto weight = static_cast<std::uint64_t>(fp_orbits[units[u].orbit].second);
      out.candidates += results[u].candidates * weight;
      out.non_generating += results[u].non_generating * weight;
      for (const auto &f : results[u].found)
        absorb(f, weight);
    }
    out.complete = true;
  } else {
    constexpr std::uint64_t kChunk = 1 << 14;
    const std::size_t chunks = static_cast<std::size_t>((opts.budget + kChunk - 1) / kChunk);
    std::vector<std::optional<UnitResult>> results(chunks);
    std::size_t prefix = 0, final_prefix = chunks;
    std::set<std::vector<int>> prefix_orbits;
    run_units(
        chunks, opts.workers, done,
        [&](std::size_t u) {
          UnitResult r;
          std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                            static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(u >> 32)};
          std::mt19937_64 rng(seq);
          const std::uint64_t samples = std::min(kChunk, opts.budget - u * kChunk);
          std::set<std::vector<int>> seen;
          for (std::uint64_t k = 0; k < samples; ++k) {
            auto dived = search.dive(rng);
            if (!dived)
              continue;
            const std::vector<int> &sigma = *dived;
            ++r.candidates;
            if (!seen.insert(sigma).second)
              continue;
            const std::array<Perm, 2> gens{Perm(sigma), out.tau};
            GeneratedGroup g = generation_test(gens);
            if (g == GeneratedGroup::other)
              ++r.non_generating;
            else
              r.found.push_back({sigma, g});
          }
          return r;
        },
        [&](std::size_t u, UnitResult r, bool from_file) {
          log_unit(u, r, from_file);
          results[u] = std::move(r);
          while (prefix < chunks && results[prefix]) {
            for (const auto &f : results[prefix]->found) {
              const std::array<Perm, 2> pair{Perm(f.sigma), out.tau};
              prefix_orbits.insert(flat_key(canonical_form(pair)));
            }
            ++prefix;
            if (opts.target && prefix_orbits.size() >= opts.target && final_prefix == chunks) {
              final_prefix = prefix;
              stop = true;
            }
          }
        },
        stop);
    for (std::size_t u = 0; u < final_prefix; ++u) {
      if (!results[u])
        fail(Errc::internal, "missing randomized chunk " + std::to_string(u));
      out.samples += std::min(kChunk, opts.budget - u * kChunk);
      for (const auto &f : results[u]->found)
        absorb(f, 1);
    }
    out.complete = false;
  }

  for (auto &[key, rec] : orbits) {
    out.orbits.push_back(rec);
    (rec.group == GeneratedGroup::Sn ? out.count_sn : out.count_an) += 1;
  }
  std::sort(out.orbits.begin(), out.orbits.end(),
            [](const OrbitRecord &a, const OrbitRecord &b) { return a.sigma < b.sigma; });
  out.count = out.orbits.size();

  if (opts.mode == SearchMode::exhaustive)
    for (const auto &o : out.orbits)
      if (o.size != out.centralizer_order)
        fail(Errc::internal, "orbit of " + o.sigma.to_string() + " has size " +
                                 std::to_string(o.size) + ", expected |Cent(tau)| = " +
                                 std::to_string(out.centralizer_order));

  out.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
  return out;
}

CensusResult count_case1_tuple_classes(int n, int workers) {
  const auto start_time = std::chrono::steady_clock::now();
  const auto types = tuple_cycle_types(CaseId::case1, n);
  const Perm s1 = canonical_element(types[0]);

  // the involution class of s1
  std::vector<Perm> involutions;
  {
    std::vector<int> img(static_cast<std::size_t>(n), -1);
    std::function<void(bool)> rec = [&](bool fixed_point_free) {
      int x = 0;
      while (x < n && img[static_cast<std::size_t>(x)] >= 0)
        ++x;
      if (x == n) {
        involutions.emplace_back(img);
        return;
      }
      if (fixed_point_free) {
        img[static_cast<std::size_t>(x)] = x;
        rec(false);
        img[static_cast<std::size_t>(x)] = -1;
      }
      for (int y = x + 1; y < n; ++y) {
        if (img[static_cast<std::size_t>(y)] >= 0)
          continue;
        img[static_cast<std::size_t>(x)] = y;
        img[static_cast<std::size_t>(y)] = x;
        rec(fixed_point_free);
        img[static_cast<std::size_t>(x)] = img[static_cast<std::size_t>(y)] = -1;
      }
    };
    rec(true);
  }
  const CycleType s4_type = types[3];

  struct Partial {
    std::uint64_t labeled = 0;
    std::map<std::vector<int>, std::vector<Perm>> classes;
  };
  std::vector<Partial> parts(involutions.size());
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= involutions.size())
        return;
      Partial &part = parts[i];
      const Perm &s2 = involutions[i];
      const Perm s12 = s1 * s2;
      for (const Perm &s3 : involutions) {
        const Perm q = (s12 * s3).inverse(); // q = s4 * s5
        if (CycleType::of(q).max_part() > 4)
          continue;
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b) {
            std::vector<int> t(static_cast<std::size_t>(n));
            std::iota(t.begin(), t.end(), 0);
            std::swap(t[static_cast<std::size_t>(a)], t[static_cast<std::size_t>(b)]);
            const Perm s5(t);
            const Perm s4 = q * s5; // s4 s5 = q with s5 an involution
            if (CycleType::of(s4) != s4_type)
              continue;
            std::vector<Perm> tuple{s1, s2, s3, s4, s5};
            if (!is_transitive(tuple) || generation_test(tuple) == GeneratedGroup::other)
              continue;
            ++part.labeled;
            auto key = flat_key(canonical_form(tuple));
            part.classes.try_emplace(std::move(key), std::move(tuple));
          }
      }
    }
  };
  const int nthreads = std::max(1, workers);
  if (nthreads == 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i)
      pool.emplace_back(body);
    for (auto &t : pool)
      t.join();
  }

  CensusResult out;
  out.n = n;
  std::map<std::vector<int>, std::vector<Perm>> classes;
  for (auto &p : parts) {
    out.labeled += p.labeled;
    for (auto &[k, v] : p.classes)
      classes.try_emplace(k, std::move(v));
  }
  out.count = classes.size();
  for (const auto &[key, tuple] : classes) {
    const BranchTuple t{CaseId::case1, tuple};
    (generation_test(tuple) == GeneratedGroup::Sn ? out.count_sn : out.count_an) += 1;
    if (flat_key(canonical_form(primed_tuple(t).perms)) == key)
      ++out.symmetric;
  }
  const std::uint64_t cent = types[0].centralizer_order();
  if (out.labeled != out.count * cent)
    fail(Errc::internal, "census self-check failed: " + std::to_string(out.labeled) +
                             " labeled tuples, " + std::to_string(out.count) + " classes, |Cent(s1)| = " +
                             std::to_string(cent));
  Integer class_of_s1 = 1;
  for (int k = 2; k <= n; ++k)
    class_of_s1 *= k;
  class_of_s1 /= static_cast<unsigned long>(cent);
  out.labeled_total = class_of_s1 * static_cast<unsigned long>(out.labeled);
  out.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
  return out;
}

} // namespace ellsub
