#pragma once

#include <stdexcept>
#include <string>

namespace mtrees {

enum class Errc {
  oracle_bound_exceeded,
  oracle_mismatch,
  zero_constant_term,
  nonzero_inner_constant,
  nonzero_constant,
  zero_linear_term,
  empty_series,
  invalid_order,
  empty_arguments,
  zero_leaf_weight,
  non_integer_result,
  invalid_parameter,
  parse_error,
};

const char* errc_name(Errc code) noexcept;

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mtrees
