#include "core/common.hpp"

#include <cstdio>

namespace trikite {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Ok: return "ok";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::Admissibility: return "admissibility";
    case ErrorCode::BudgetExceeded: return "budget_exceeded";
    case ErrorCode::InsufficientData: return "insufficient_data";
    case ErrorCode::DuplicateAngle: return "duplicate_angle";
    case ErrorCode::HypothesisNotMet: return "hypothesis_not_met";
    case ErrorCode::SearchFailed: return "search_failed";
    case ErrorCode::ZeroPolynomial: return "zero_polynomial";
    case ErrorCode::Infeasible: return "infeasible";
    case ErrorCode::DegenerateRange: return "degenerate_range";
    case ErrorCode::AmbiguousHit: return "ambiguous_hit";
    case ErrorCode::Io: return "io";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string format_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_hex(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%a", v);
  return buf;
}

}  // namespace trikite
