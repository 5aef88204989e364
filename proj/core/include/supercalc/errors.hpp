#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace supercalc {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SUPERCALC_DEFINE_ERROR(Name) \
  class Name : public Error {        \
   public:                           \
    using Error::Error;              \
  }

SUPERCALC_DEFINE_ERROR(PoleError);
SUPERCALC_DEFINE_ERROR(SpaceMismatch);
SUPERCALC_DEFINE_ERROR(IndexError);
SUPERCALC_DEFINE_ERROR(NoSolution);
SUPERCALC_DEFINE_ERROR(UnsupportedDimension);
SUPERCALC_DEFINE_ERROR(UnsupportedSuperdimension);
SUPERCALC_DEFINE_ERROR(InternalInconsistency);
SUPERCALC_DEFINE_ERROR(BadAlpha);
SUPERCALC_DEFINE_ERROR(DegreeTooLow);
SUPERCALC_DEFINE_ERROR(NonIntegrable);
SUPERCALC_DEFINE_ERROR(DegenerateDirection);
SUPERCALC_DEFINE_ERROR(QuadratureFailure);
SUPERCALC_DEFINE_ERROR(UnknownSuite);

#undef SUPERCALC_DEFINE_ERROR

/// Parse failure; `offset` is the byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace supercalc
