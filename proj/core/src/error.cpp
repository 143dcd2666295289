#include <algorithm>
#include <string>

#include "degcorr/error.hpp"
#include "degcorr/exact.hpp"

namespace degcorr {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::empty_graph: return "empty_graph";
    case ErrorCode::zero_variance: return "zero_variance";
    case ErrorCode::degenerate_size: return "degenerate_size";
    case ErrorCode::unbalanced_stubs: return "unbalanced_stubs";
    case ErrorCode::balance_failed: return "balance_failed";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::parse_error: return "parse_error";
  }
  return "unknown";
}

std::string to_string(Int128 v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  UInt128 u = negative ? -static_cast<UInt128>(v) : static_cast<UInt128>(v);
  std::string digits;
  while (u != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace degcorr
