#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "migmeta/metamodel.hpp"

namespace migmeta {

enum class ErrorCode {
  UnknownConcept,
  UnknownRelationship,
  UnknownMetamodelVersion,
  NonconformantModel,
  BaseMismatch,
  ExtensionConflict,
  InvalidResult,
  EmptySelection,
  IdCollision,
  KindMismatch,
  InvalidJson,
};

[[nodiscard]] std::string_view to_string(ErrorCode code) noexcept;

/// Raised by operations whose preconditions fail. Validation findings are
/// never thrown; they are returned as Diagnostic lists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<Diagnostic> diagnostics = {});

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }
  [[nodiscard]] const std::vector<Diagnostic>& diagnostics() const noexcept {
    return diagnostics_;
  }

 private:
  ErrorCode code_;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace migmeta
