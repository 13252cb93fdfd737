#include "toriq/error.hpp"

namespace toriq {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::NotPointed: return "NOT_POINTED";
    case ErrorCode::ZeroCone: return "ZERO_CONE";
    case ErrorCode::UnknownRay: return "UNKNOWN_RAY";
    case ErrorCode::InvalidFan: return "INVALID_FAN";
    case ErrorCode::SpanDeficient: return "SPAN_DEFICIENT";
    case ErrorCode::OutsideSupport: return "OUTSIDE_SUPPORT";
    case ErrorCode::TorsionPic: return "TORSION_PIC";
    case ErrorCode::NotEnoughCartier: return "NOT_ENOUGH_CARTIER";
    case ErrorCode::InternalInconsistency: return "INTERNAL_INCONSISTENCY";
    case ErrorCode::CertificateFailure: return "CERTIFICATE_FAILURE";
    case ErrorCode::NonIntegralRestriction: return "NON_INTEGRAL_RESTRICTION";
    case ErrorCode::DegreeUnreachable: return "DEGREE_UNREACHABLE";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::IoError: return "IO_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace toriq
