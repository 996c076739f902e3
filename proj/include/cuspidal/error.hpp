#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cuspidal {

enum class Errc {
  InvalidQ,
  InvalidDegP,
  InvalidR,
  IndexOutOfRange,
  UnsupportedLevel,
  UnsupportedEdge,
  SingularMatrix,
  NonZeroDegree,
  InconsistentBounds,
  CertificationFailure,
};

constexpr std::string_view errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::InvalidQ: return "InvalidQ";
    case Errc::InvalidDegP: return "InvalidDegP";
    case Errc::InvalidR: return "InvalidR";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::UnsupportedLevel: return "UnsupportedLevel";
    case Errc::UnsupportedEdge: return "UnsupportedEdge";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::NonZeroDegree: return "NonZeroDegree";
    case Errc::InconsistentBounds: return "InconsistentBounds";
    case Errc::CertificationFailure: return "CertificationFailure";
  }
  return "Unknown";
}

/// Domain error raised by every module. `code()` identifies the failure class;
/// `what()` carries "<Name>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace cuspidal
