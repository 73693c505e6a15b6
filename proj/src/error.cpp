#include "coarsetw/error.hpp"

namespace coarsetw {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::empty_set: return "EmptySet";
    case Errc::too_large: return "TooLarge";
    case Errc::disconnected: return "Disconnected";
    case Errc::malformed_decomposition: return "MalformedDecomposition";
    case Errc::invalid_decomposition: return "InvalidDecomposition";
    case Errc::invalid_partition: return "InvalidPartition";
    case Errc::diameter_exceeded: return "DiameterExceeded";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::composition_mismatch: return "CompositionMismatch";
    case Errc::precondition: return "PreconditionFailed";
    case Errc::parse: return "ParseError";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

Error Error::relabel(std::string_view prefix) const {
  Error out(code_, std::string(prefix) + ": " + what(), 0);
  out.bag_ = bag_;
  out.value_ = value_;
  return out;
}

}  // namespace coarsetw
