#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cutscope {

enum class Errc {
  invalid_graph,
  invalid_family,
  invalid_pairing,
  invalid_subset,
  ring_mismatch,
  empty_ideal,
  invalid_exponent,
  invalid_field,
  invalid_pair,
  resource_exhausted,
  undefined,
  not_equigenerated,
  unsupported_input,
  invalid_decomposition,
  method_mismatch,
  parse_error,
};

inline std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::invalid_graph: return "invalid-graph";
    case Errc::invalid_family: return "invalid-family";
    case Errc::invalid_pairing: return "invalid-pairing";
    case Errc::invalid_subset: return "invalid-subset";
    case Errc::ring_mismatch: return "ring-mismatch";
    case Errc::empty_ideal: return "empty-ideal";
    case Errc::invalid_exponent: return "invalid-exponent";
    case Errc::invalid_field: return "invalid-field";
    case Errc::invalid_pair: return "invalid-pair";
    case Errc::resource_exhausted: return "resource-exhausted";
    case Errc::undefined: return "undefined";
    case Errc::not_equigenerated: return "not-equigenerated";
    case Errc::unsupported_input: return "unsupported-input";
    case Errc::invalid_decomposition: return "invalid-decomposition";
    case Errc::method_mismatch: return "method-mismatch";
    case Errc::parse_error: return "parse-error";
  }
  return "unknown";
}

// Every failure in the library surfaces as this one exception type; code()
// tells callers (the CLI in particular) which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cutscope
