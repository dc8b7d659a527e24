#pragma once

#include "ellsub/coverings/perm.hpp"
#include "ellsub/exact/rational.hpp"

#include <vector>

namespace ellsub {

using Partition = std::vector<int>; // weakly decreasing, positive parts

std::vector<Partition> partitions(int n);

/// chi^lambda at an element of cycle type mu (Murnaghan-Nakayama).
Integer character_value(const Partition &lambda, const CycleType &mu);

/// chi^lambda(1) by the hook length formula.
Integer character_degree(const Partition &lambda);

/// n! / z_mu.
Integer class_size(const CycleType &mu);

/// Number of pairs (x, y), x of type a, y of type b, with x * y equal to a
/// fixed element of type c.
Integer structure_constant(const CycleType &a, const CycleType &b, const CycleType &c);

} // namespace ellsub
