#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>

namespace migmeta {

/// True when `text` matches `[A-Z][A-Za-z0-9]*`.
[[nodiscard]] bool is_upper_camel(std::string_view text) noexcept;

/// Converts a human-readable name ("Choose cloud provider", "Re-configure
/// network") into an UpperCamel identifier. Non-alphanumeric characters are
/// dropped and each word is capitalised.
[[nodiscard]] std::string to_upper_camel(std::string_view name);

/// Inverse direction for identifiers that carry no display name:
/// "UseLogging" -> "Use logging".
[[nodiscard]] std::string display_name_from_id(std::string_view id);

/// Strongly typed identifier. The tag keeps concept ids and activity ids
/// from being mixed up even though they share a lexical rule.
template <typename Tag>
class Identifier {
 public:
  Identifier() = default;
  explicit Identifier(std::string value) : value_(std::move(value)) {}

  [[nodiscard]] const std::string& str() const noexcept { return value_; }
  [[nodiscard]] bool empty() const noexcept { return value_.empty(); }
  [[nodiscard]] bool well_formed() const noexcept { return is_upper_camel(value_); }

  friend auto operator<=>(const Identifier&, const Identifier&) = default;
  friend bool operator==(const Identifier&, const Identifier&) = default;

 private:
  std::string value_;
};

struct ConceptTag {};
struct ActivityTag {};

using ConceptId = Identifier<ConceptTag>;
using ActivityId = Identifier<ActivityTag>;

}  // namespace migmeta

template <typename Tag>
struct std::hash<migmeta::Identifier<Tag>> {
  std::size_t operator()(const migmeta::Identifier<Tag>& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};
