#pragma once

#include <stdexcept>
#include <string>

namespace sldisk {

enum class ErrorCode {
  ParseError,
  InvalidDisk,
  NotConvex,
  NotNaturalEdge,
  NotTrV,
  NotVertical,
  NotConvexImage,
  NotBoundaryEmbedding,
  Obstructive,
  NotSpanning,
  NoPlateau,
  VanishingLine,
  PreconditionViolated,
  XNotInProjection,
  DimensionTooHigh,
  UnboundedPolytope,
  DegeneratePolytope,
  RayUnbounded,
  GenerationFailed,
  NonAffineSystem,
  NoKeyFound,
  InternalError,
};

const char* error_name(ErrorCode code);

// Process exit code contract: 1 parse/IO, 2 precondition, 3 internal inconsistency.
int exit_code_for(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

// Internal-consistency assertion: a failure means the implementation, not the input,
// broke an established invariant.
inline void require_internal(bool ok, const std::string& message) {
  if (!ok) fail(ErrorCode::InternalError, message);
}

}  // namespace sldisk
