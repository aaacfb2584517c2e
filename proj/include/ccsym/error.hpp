#pragma once

#include <stdexcept>
#include <string>

namespace ccsym {

enum class errc {
  unsupported_ring,
  ring_mismatch,
  not_a_unit,
  not_q_algebra,
  no_canonical_hom,
  not_a_unit_series,
  zero_winding_composition,
  truncation_too_coarse,
  coefficient_not_nilpotent,
  not_in_gamma0,
  not_in_gamma_plus,
  not_in_gamma_minus,
  non_termination,
  not_a_field,
  not_one_plus_nilpotent,
  parse_error,
  symbol_not_in_ring,
  internal_error,
};

const char* errc_name(errc c);

/// Every library failure is thrown as one of these; code() tells callers
/// which contract was violated without string matching.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace ccsym
