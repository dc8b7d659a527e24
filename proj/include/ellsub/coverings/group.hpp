#pragma once

#include "ellsub/coverings/perm.hpp"
#include "ellsub/exact/rational.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace ellsub {

enum class GeneratedGroup { Sn, An, other };

std::string_view to_string(GeneratedGroup g);

bool is_transitive(std::span<const Perm> gens);

/// Transitive group with no nontrivial block system.
bool is_primitive(std::span<const Perm> gens);

/// Group order from a Schreier-Sims stabilizer chain.
Integer group_order(std::span<const Perm> gens);

/// Which of S_n, A_n or neither the generators produce. Transitivity,
/// primitivity and a prime-cycle certificate from short words decide the
/// common case; the stabilizer chain decides everything else.
GeneratedGroup generation_test(std::span<const Perm> gens);

/// Same answer, always through the stabilizer chain.
GeneratedGroup generation_test_by_order(std::span<const Perm> gens);

/// Componentwise conjugation-invariant form of a tuple that generates a
/// transitive group: the lexicographically least relabeling reachable by
/// breadth-first numbering from some start point. Two transitive tuples are
/// simultaneously conjugate iff their forms are equal.
std::vector<Perm> canonical_form(std::span<const Perm> tuple);

/// c with c^-1 a_i c = b_i for all i, i.e. b_i = a_i ^ c, if it exists.
std::optional<Perm> find_conjugator(std::span<const Perm> a, std::span<const Perm> b);

/// Generators of the centralizer of p in S_n: a rotation of each cycle and
/// an adjacent swap of equal-length cycles.
std::vector<Perm> centralizer_generators(const Perm &p);

/// Orbit of `x` under conjugation by the group generated by `gens`
/// (explicit breadth-first closure; small orbits only).
std::vector<std::vector<Perm>> conjugation_orbit(std::vector<Perm> x,
                                                 std::span<const Perm> gens);

} // namespace ellsub
