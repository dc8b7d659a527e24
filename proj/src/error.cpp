#include "ellsub/error.hpp"

namespace ellsub {

const char *errc_name(Errc code) noexcept {
  switch (code) {
  case Errc::domain: return "domain";
  case Errc::degenerate: return "degenerate-sextic";
  case Errc::j2_zero: return "J2-zero";
  case Errc::inversion_singular: return "inversion-singular";
  case Errc::not_on_locus: return "not-on-locus";
  case Errc::congruence: return "congruence-excluded";
  case Errc::unsupported: return "unsupported";
  case Errc::certificate: return "certificate";
  case Errc::identity_violation: return "identity-violation";
  case Errc::internal: return "internal";
  }
  return "unknown";
}

} // namespace ellsub
