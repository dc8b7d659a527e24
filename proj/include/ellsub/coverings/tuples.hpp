#pragma once

#include "ellsub/coverings/group.hpp"
#include "ellsub/coverings/perm.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ellsub {

enum class CaseId { case1 = 1, case2, case3, case4, case5 };

std::string_view to_string(CaseId c);
/// 1..5; throws Errc::domain otherwise.
CaseId case_from_int(int k);

/// 5 for case 1, otherwise 4.
std::size_t tuple_length(CaseId c);

/// Whether an automorphism of order 2 or 3 can fix the subfield. Throws
/// Errc::domain for even n or n < 7.
bool congruence_gate(CaseId c, int n);

/// Throws Errc::congruence when the gate excludes (c, n).
void require_gate(CaseId c, int n);

/// Required cycle type of each tuple position.
///
/// Position order follows the branch-point labeling under which the
/// coordinate-rotation formulas act. For cases 1, 2, 3, 5 this is the order
/// of the ramification list. In case 4 the formulas swap positions 1 and 3
/// and fix 2 and 4, so the element with the 3-cycle sits in position 2:
/// (involution with 1 fixed point, 3-cycle plus 2-cycles, involution with
/// 1 fixed point, involution with 3 fixed points).
std::vector<CycleType> tuple_cycle_types(CaseId c, int n);

struct BranchTuple {
  CaseId case_id = CaseId::case1;
  std::vector<Perm> perms;
};

struct TupleCheck {
  bool valid = false;
  std::string failure; // empty when valid
  GeneratedGroup group = GeneratedGroup::other;
};

TupleCheck check_tuple(const BranchTuple &t);
bool validate_tuple(const BranchTuple &t);

/// The tuple seen from the rotated coordinate. Throws Errc::unsupported
/// for case 3 and Errc::domain on a wrong tuple length.
BranchTuple primed_tuple(const BranchTuple &t);

/// c with primed(t)_i = c^-1 t_i c for every i, if one exists.
std::optional<Perm> is_symmetric(const BranchTuple &t);

struct TripleTypes {
  CycleType sigma, tau, rho;
};

/// Cycle types of sigma, tau, rho for (c, n), with every "at most one"
/// choice settled by the part-sum equation. Throws Errc::congruence when no
/// choice sums to n and Errc::unsupported for case 3.
TripleTypes triple_cycle_types(CaseId c, int n);

/// rho * tau = sigma, i.e. rho = sigma * tau^-1.
struct SymTriple {
  CaseId case_id = CaseId::case1;
  Perm sigma, tau, rho;
};

SymTriple make_triple(CaseId c, const Perm &sigma, const Perm &tau);

/// Types, the relation and generation of S_n or A_n; reason on failure.
TupleCheck check_triple(const SymTriple &tr);

/// Translation of a triple into a symmetric tuple:
///   case 1: (s, s^t, s^t^2, t^3, r^3)
///   case 2: (s, s^t, s^t^2, r^-3)
///   case 4, 5: (s, t^-2, s^(t^-1), r^-2)
/// with tau as conjugator. Throws Errc::certificate naming the failed
/// condition if the triple or the resulting tuple is invalid.
BranchTuple triple_to_tuple(const SymTriple &tr);

} // namespace ellsub
