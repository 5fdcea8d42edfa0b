#pragma once

#include <stdexcept>
#include <string>

namespace wtab {

enum class ErrorKind {
    NotEvenMultiplicity,
    InvalidForType,
    SizeMismatch,
    InvalidFrame,
    MixedParity,
    NotRowSorted,
    BadIndex,
    NotJustified,
    NotConvex,
    MixedRowParity,
    LengthMismatch,
    BoundExceeded,
    NonIntegralWeight,
    NotNegationClosed,
    VeryEvenUnsupported,
    SwapUndefined,
    SharpUndefined,
    ParseError,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotEvenMultiplicity: return "NotEvenMultiplicity";
        case ErrorKind::InvalidForType: return "InvalidForType";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::InvalidFrame: return "InvalidFrame";
        case ErrorKind::MixedParity: return "MixedParity";
        case ErrorKind::NotRowSorted: return "NotRowSorted";
        case ErrorKind::BadIndex: return "BadIndex";
        case ErrorKind::NotJustified: return "NotJustified";
        case ErrorKind::NotConvex: return "NotConvex";
        case ErrorKind::MixedRowParity: return "MixedRowParity";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::BoundExceeded: return "BoundExceeded";
        case ErrorKind::NonIntegralWeight: return "NonIntegralWeight";
        case ErrorKind::NotNegationClosed: return "NotNegationClosed";
        case ErrorKind::VeryEvenUnsupported: return "VeryEvenUnsupported";
        case ErrorKind::SwapUndefined: return "SwapUndefined";
        case ErrorKind::SharpUndefined: return "SharpUndefined";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace wtab
