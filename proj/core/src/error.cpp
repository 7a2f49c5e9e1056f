#include "specgraph/error.hpp"

namespace specgraph {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_char: return "InvalidChar";
    case Errc::truncated_payload: return "TruncatedPayload";
    case Errc::nonzero_padding: return "NonzeroPadding";
    case Errc::invalid_params: return "InvalidParams";
    case Errc::non_convergence: return "NonConvergence";
    case Errc::degenerate_spectrum: return "DegenerateSpectrum";
    case Errc::insufficient_data: return "InsufficientData";
    case Errc::pole_input: return "PoleInput";
    case Errc::invalid_partition: return "InvalidPartition";
    case Errc::invalid_order: return "InvalidOrder";
    case Errc::not_applicable: return "NotApplicable";
    case Errc::search_budget_exceeded: return "SearchBudgetExceeded";
    case Errc::degenerate_eigenvector: return "DegenerateEigenvector";
    case Errc::order_too_large: return "OrderTooLarge";
    case Errc::mixed_orders: return "MixedOrders";
    case Errc::empty_source: return "EmptySource";
    case Errc::io_error: return "IoError";
    case Errc::internal_defect: return "InternalDefect";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace specgraph
