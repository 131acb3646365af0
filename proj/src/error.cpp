#include "migmeta/error.hpp"

namespace migmeta {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownConcept: return "UNKNOWN_CONCEPT";
    case ErrorCode::UnknownRelationship: return "UNKNOWN_RELATIONSHIP";
    case ErrorCode::UnknownMetamodelVersion: return "UNKNOWN_METAMODEL_VERSION";
    case ErrorCode::NonconformantModel: return "NONCONFORMANT_MODEL";
    case ErrorCode::BaseMismatch: return "BASE_MISMATCH";
    case ErrorCode::ExtensionConflict: return "EXTENSION_CONFLICT";
    case ErrorCode::InvalidResult: return "INVALID_RESULT";
    case ErrorCode::EmptySelection: return "EMPTY_SELECTION";
    case ErrorCode::IdCollision: return "ID_COLLISION";
    case ErrorCode::KindMismatch: return "KIND_MISMATCH";
    case ErrorCode::InvalidJson: return "INVALID_JSON";
  }
  return "UNKNOWN_CONCEPT";
}

Error::Error(ErrorCode code, const std::string& message, std::vector<Diagnostic> diagnostics)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      diagnostics_(std::move(diagnostics)) {}

}  // namespace migmeta
