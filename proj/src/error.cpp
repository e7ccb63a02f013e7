#include "fibconj/error.hpp"

namespace fibconj {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::AlphabetMismatch: return "alphabet-mismatch";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::NotAFixedPointSeed: return "not-a-fixed-point-seed";
    case ErrorKind::NonGrowingSeed: return "non-growing-seed";
    case ErrorKind::PrimitivityRequired: return "primitivity-required";
    case ErrorKind::UnreachableLetter: return "unreachable-letter";
    case ErrorKind::NotInLanguage: return "not-in-language";
    case ErrorKind::NotDecomposable: return "not-decomposable";
    case ErrorKind::CertificateFailure: return "certificate-failure";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::Internal: return "internal-error";
  }
  return "unknown";
}

}  // namespace fibconj
