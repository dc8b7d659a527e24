#pragma once

#include "ellsub/coverings/tuples.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ellsub {

enum class SearchMode { exhaustive, randomized };

std::string_view to_string(SearchMode m);

struct SearchOptions {
  SearchMode mode = SearchMode::exhaustive;
  /// Randomized mode: number of random descents through the pruned search
  /// tree (dead ends included).
  std::uint64_t budget = 1'000'000;
  /// Randomized mode: stop after the shortest prefix of sample chunks that
  /// reaches this many orbits (0: use the whole budget).
  std::uint64_t target = 0;
  std::uint64_t seed = 1;
  int workers = 1;
  /// JSON-lines file of finished work units; read to resume, appended to.
  std::string checkpoint;
  /// Replaces the canonical tau (must have the required cycle type).
  std::optional<Perm> tau;
};

struct OrbitRecord {
  Perm sigma;              // least sigma found in the orbit
  std::uint64_t size = 0;  // elements of the orbit under Cent(tau) seen
  GeneratedGroup group = GeneratedGroup::other;
};

struct TripleCount {
  CaseId case_id = CaseId::case1;
  int n = 0;
  SearchMode mode = SearchMode::exhaustive;
  bool complete = false;
  std::uint64_t count = 0;    // orbits of generating sigma under Cent(tau)
  std::uint64_t count_sn = 0;
  std::uint64_t count_an = 0;
  std::vector<OrbitRecord> orbits;
  TripleTypes types;
  Perm tau;
  std::uint64_t centralizer_order = 0;
  /// Exhaustive mode: sigma with the right cycle type of rho, over all
  /// fixed points, before the generation filter; and how many of those
  /// fail generation.
  std::uint64_t candidates = 0;
  std::uint64_t non_generating = 0;
  std::uint64_t samples = 0; // randomized mode
  double elapsed = 0;
};

/// Classes of triples (sigma, tau, rho) with the prescribed cycle types with
/// rho * tau = sigma generating S_n or A_n, counted as orbits of sigma under
/// the centralizer of a fixed tau. Throws Errc::congruence for excluded cells.
///
/// Exhaustive mode backtracks over sigma with the partial rho kept as a set
/// of paths and prunes as soon as a closed cycle or a path is incompatible
/// with the cycle type of rho. Only fixed points in distinct Cent(tau)-orbits
/// are tried; the count is (valid sigma over all fixed points) / |Cent(tau)|
/// since the centralizer acts freely on generating sigma. Randomized mode
/// samples sigma by random descents through the same tree, so every sample
/// that survives has rho of the right type; the count is a lower bound.
TripleCount count_triple_classes(CaseId c, int n, const SearchOptions &opts = {});

struct CensusResult {
  int n = 0;
  std::uint64_t count = 0;         // classes of valid case-1 tuples
  std::uint64_t count_sn = 0, count_an = 0;
  std::uint64_t labeled = 0;       // valid tuples with s1 fixed
  std::uint64_t symmetric = 0;     // symmetric classes among them
  Integer labeled_total;           // labeled * |class of s1| = count * n!
  double elapsed = 0;
};

/// All valid case-1 tuples with s1 fixed, enumerated over (s2, s3, s5).
/// Throws Errc::internal if the labeled count is not count * |Cent(s1)|.
CensusResult count_case1_tuple_classes(int n, int workers = 1);

} // namespace ellsub
