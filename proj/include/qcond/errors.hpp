// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace qcond {

// Every failure mode of the toolkit carries one of these codes. The CLI maps
// validation codes to exit 2 and everything else to exit 3.
enum class errc {
  dimension_mismatch,
  not_hermitian,
  not_unitary,
  not_projection,
  not_density_matrix,
  not_commutative,
  incompatible_conditioning,
  all_branches_null,
  zero_probability_outcome,
  zero_vector,
  unknown_outcome,
  out_of_schedule,
  no_convergence,
  too_few_steps,
  axis_out_of_range,
  not_mutually_exclusive,
  invalid_joint,
  not_qubit,
  chain_too_large,
  schema_error,
  unsupported_format,
  invalid_argument,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const { return code_; }

  // Validation failures are request problems (bad scenario, bad format), not
  // domain outcomes.
  bool is_validation() const {
    return code_ == errc::schema_error || code_ == errc::unsupported_format;
  }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace qcond
