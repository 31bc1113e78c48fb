#include "bperm/error.hpp"

namespace bperm {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::malformed_token: return "MalformedToken";
    case ErrorCode::repeated_value: return "RepeatedValue";
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::zero_entry: return "ZeroEntry";
    case ErrorCode::invalid_size: return "InvalidSize";
    case ErrorCode::size_mismatch: return "SizeMismatch";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::adjacent_values: return "AdjacentValues";
    case ErrorCode::value_out_of_range: return "ValueOutOfRange";
    case ErrorCode::values_absent: return "ValuesAbsent";
    case ErrorCode::inadmissible: return "Inadmissible";
    case ErrorCode::size_cap: return "SizeCap";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace bperm
