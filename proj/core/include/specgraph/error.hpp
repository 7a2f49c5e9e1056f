#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace specgraph {

enum class Errc {
  invalid_char,
  truncated_payload,
  nonzero_padding,
  invalid_params,
  non_convergence,
  degenerate_spectrum,
  insufficient_data,
  pole_input,
  invalid_partition,
  invalid_order,
  not_applicable,
  search_budget_exceeded,
  degenerate_eigenvector,
  order_too_large,
  mixed_orders,
  empty_source,
  io_error,
  internal_defect,
};

std::string_view to_string(Errc code) noexcept;

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace specgraph
