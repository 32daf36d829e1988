#pragma once

#include <stdexcept>
#include <string>

namespace gbe {

enum class ErrorCode {
  NonBipartite,
  LengthMismatch,
  UnknownVertex,
  TooLarge,
  BadZone,
  BadParams,
  PEOFailure,
  NotSubgraph,
  NotSquarefree,
  TooSmall,
  BudgetExceeded,
  IdentityFailure,
  CertificateInvalid,
  BoundsMismatch,
  Infeasible,
  Unbounded,
  ParseError,
  InvalidGraph,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonBipartite: return "NonBipartite";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadZone: return "BadZone";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::PEOFailure: return "PEOFailure";
    case ErrorCode::NotSubgraph: return "NotSubgraph";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::IdentityFailure: return "IdentityFailure";
    case ErrorCode::CertificateInvalid: return "CertificateInvalid";
    case ErrorCode::BoundsMismatch: return "BoundsMismatch";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// True for the codes that mean "instance too big", not "wrong answer".
inline bool is_budget_error(ErrorCode c) {
  return c == ErrorCode::BudgetExceeded || c == ErrorCode::TooLarge;
}

}  // namespace gbe
