#pragma once

#include <stdexcept>
#include <string>

namespace ellsub {

enum class Errc {
  domain,             // precondition on the input violated
  degenerate,         // Delta(u,v) = 0 or a sextic with a repeated root
  j2_zero,            // absolute invariants need J2 != 0
  inversion_singular, // J2 = 0 or every cubic root has u = -15
  not_on_locus,       // no (u,v) preimage passes the moduli check
  congruence,         // (case, n) excluded by the order/congruence gate
  unsupported,        // no machinery for this case
  certificate,        // a constructed object failed its own validation
  identity_violation, // an exact algebraic identity did not close
  internal,
};

const char *errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string &what) {
  throw Error(code, what);
}

} // namespace ellsub
