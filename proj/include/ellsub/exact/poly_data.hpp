#pragma once

#include "ellsub/exact/mpoly.hpp"

#include <string_view>

namespace ellsub::data {

/// Polynomial tables compiled in from the text files under data/.
enum class Table {
  j2,         // a0..a6
  j4,         // a0..a6
  j6,         // a0..a6, reconstructed
  j6_printed, // a0..a6, complete monomials of the printed J6 only
  l2,         // J2 J4 J6 J10, reconstructed locus equation
  l2_printed, // J2 J4 J6 J10, as printed
  phi3,       // x y
  g1,         // u v
  g2,         // u v
};

std::string_view file_name(Table t);
std::string_view text(Table t);

/// Parsed once on first use; safe to call concurrently.
const MultiPolyTable &table(Table t);

} // namespace ellsub::data
