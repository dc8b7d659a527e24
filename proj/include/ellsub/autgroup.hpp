#pragma once

#include "ellsub/elliptic_locus.hpp"
#include "ellsub/igusa.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace ellsub {

/// Automorphism groups of genus-2 curves in characteristic 0.
enum class AutGroup { Z2, Z10, V4, D8, D12, Z3semiD8, GL2_3 };

std::string_view to_string(AutGroup g);

/// Number of classes of elliptic involutions: 0, 1 or 2.
int involution_class_count(AutGroup g);

AutGroup classify_uv(const UVPoint &p);

struct Classification {
  AutGroup group = AutGroup::Z2;
  std::vector<UVPoint> preimages; // empty off the locus
};

/// Off the locus: Z10 when J2 = J4 = J6 = 0, else Z2. On it, every (u,v)
/// preimage is classified and the answers must agree (Errc::internal if not).
/// Throws Errc::domain for J10 = 0; inversion errors propagate.
Classification classify_sextic(const BinarySextic &f);

/// A point of P^1: a rational, or infinity as nullopt.
using ProjPoint = std::optional<Rational>;

std::string to_string(const ProjPoint &p); // "inf" for infinity
ProjPoint parse_proj_point(std::string_view text);

struct BranchSet {
  std::array<ProjPoint, 6> points;
};

/// Throws Errc::domain on repeated points.
void require_distinct(const BranchSet &b);

/// Image under x -> (a x + b) / (c x + d).
BranchSet apply_mobius(const BranchSet &b, const Matrix2 &m);

/// Sextic whose roots are the branch points; infinity lowers the degree.
BinarySextic sextic_from_branch_set(const BranchSet &b);

struct PairingCertificate {
  std::array<std::pair<int, int>, 3> pairing; // indices into the original set
  Rational det;
};

/// For each of the 15 perfect pairings, the determinant of the coefficient
/// rows (1, -(p+q), pq) of the three pair quadratics, computed after a
/// Mobius map that makes all six points finite. det = 0 exactly when an
/// involution of P^1 swaps every pair.
std::vector<PairingCertificate> elliptic_pairings(const BranchSet &b);

bool has_elliptic_involution(const BranchSet &b);

} // namespace ellsub
