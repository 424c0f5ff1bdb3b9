#ifndef EXACTCOMB_ERROR_HPP
#define EXACTCOMB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace exactcomb {

enum class ErrorCode {
  InvalidArgument,
  IndexOutOfRange,
  NotAPerfectSquare,
  DimensionTooLarge,
  UnboundVariable,
  NotEulerian,
  TooLarge,
  InvalidExitOrder,
  InvalidArborescence,
  OddCircuit,
  InvalidCircuit,
  InvalidEmbedding,
  Disconnected,
  ShapeMismatch,
  DegreeMismatch,
  InvalidCode,
  MalformedPartition,
  NotLinearSpace,
  AllCollinear,
  ElementOutOfGroup,
  GroupTooLarge,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotAPerfectSquare: return "NotAPerfectSquare";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::NotEulerian: return "NotEulerian";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidExitOrder: return "InvalidExitOrder";
    case ErrorCode::InvalidArborescence: return "InvalidArborescence";
    case ErrorCode::OddCircuit: return "OddCircuit";
    case ErrorCode::InvalidCircuit: return "InvalidCircuit";
    case ErrorCode::InvalidEmbedding: return "InvalidEmbedding";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::InvalidCode: return "InvalidCode";
    case ErrorCode::MalformedPartition: return "MalformedPartition";
    case ErrorCode::NotLinearSpace: return "NotLinearSpace";
    case ErrorCode::AllCollinear: return "AllCollinear";
    case ErrorCode::ElementOutOfGroup: return "ElementOutOfGroup";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every contract violation in the library is reported as an Error carrying
/// the violated condition's code; the message names the offending value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

}  // namespace exactcomb

#endif  // EXACTCOMB_ERROR_HPP
