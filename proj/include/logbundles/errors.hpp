#ifndef LOGB_ERRORS_HPP
#define LOGB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace logbund {

enum class errc {
  descriptor_mismatch,
  division_by_zero,
  index_out_of_range,
  order_mismatch,
  budget_exceeded,
  not_zero_dimensional,
  schema_error,
  singular_component,
  duplicate_component,
  unsupported_degree,
  unsupported_field,
  singular_conic,
  dependent_linear_forms,
  degenerate_quadric,
  normal_crossings_violation,
  family_mismatch,
  singular_test_curve,
  chart_mismatch,
  precondition_violated,
  positive_dimensional_locus,
  zero_kernel_vector,
  non_real_field,
  usage_error,
  internal,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline void check(bool ok, errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace logbund

#endif
