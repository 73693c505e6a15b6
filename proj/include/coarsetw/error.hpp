#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace coarsetw {

enum class Errc {
  empty_set,
  too_large,
  disconnected,
  malformed_decomposition,
  invalid_decomposition,
  invalid_partition,
  diameter_exceeded,
  budget_exceeded,
  composition_mismatch,
  precondition,
  parse,
  invalid_argument,
};

std::string_view errc_name(Errc code);

// Single exception type for the library. `bag()` names the offending bag when
// an error was raised while processing one bag of a decomposition; `value()`
// carries a numeric payload (e.g. the achieved diameter for budget_exceeded).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

  std::optional<std::size_t> bag() const noexcept { return bag_; }
  Error& with_bag(std::size_t bag) {
    bag_ = bag;
    return *this;
  }

  std::optional<long long> value() const noexcept { return value_; }
  Error& with_value(long long value) {
    value_ = value;
    return *this;
  }

  // Rebuilds the error with `prefix` prepended to the message, keeping payloads.
  Error relabel(std::string_view prefix) const;

 private:
  Error(Errc code, std::string full_message, int)
      : std::runtime_error(std::move(full_message)), code_(code) {}

  Errc code_;
  std::optional<std::size_t> bag_;
  std::optional<long long> value_;
};

}  // namespace coarsetw
