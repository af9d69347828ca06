#include "sldisk/errors.hpp"

namespace sldisk {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidDisk: return "InvalidDisk";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::NotNaturalEdge: return "NotNaturalEdge";
    case ErrorCode::NotTrV: return "NotTrV";
    case ErrorCode::NotVertical: return "NotVertical";
    case ErrorCode::NotConvexImage: return "NotConvexImage";
    case ErrorCode::NotBoundaryEmbedding: return "NotBoundaryEmbedding";
    case ErrorCode::Obstructive: return "Obstructive";
    case ErrorCode::NotSpanning: return "NotSpanning";
    case ErrorCode::NoPlateau: return "NoPlateau";
    case ErrorCode::VanishingLine: return "VanishingLine";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::XNotInProjection: return "XNotInProjection";
    case ErrorCode::DimensionTooHigh: return "DimensionTooHigh";
    case ErrorCode::UnboundedPolytope: return "UnboundedPolytope";
    case ErrorCode::DegeneratePolytope: return "DegeneratePolytope";
    case ErrorCode::RayUnbounded: return "RayUnbounded";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::NonAffineSystem: return "NonAffineSystem";
    case ErrorCode::NoKeyFound: return "NoKeyFound";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return 1;
    case ErrorCode::NoKeyFound:
    case ErrorCode::InternalError:
      return 3;
    default:
      return 2;
  }
}

}  // namespace sldisk
