#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toriq {

enum class ErrorCode {
  DimensionMismatch,
  NotPointed,
  ZeroCone,
  UnknownRay,
  InvalidFan,
  SpanDeficient,
  OutsideSupport,
  TorsionPic,
  NotEnoughCartier,
  InternalInconsistency,
  CertificateFailure,
  NonIntegralRestriction,
  DegreeUnreachable,
  ParseError,
  IoError,
};

/// Upper-case identifier used in reports, e.g. "TORSION_PIC".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toriq
