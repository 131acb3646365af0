#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace migmeta::embedded {

struct File {
  std::string_view name;  // stem, e.g. "informait"
  std::string_view text;
};

/// Case-study instance models: informait, toas, springtrader and the
/// informait-narrative variant.
[[nodiscard]] const std::vector<File>& fixtures();

/// The three case fixtures that make up the coverage table, in column order.
[[nodiscard]] std::vector<File> case_fixtures();

/// Extensions that evolve version 1.0 into the final metamodel, in order:
/// use-logging, resolve-licensing, define-rollback.
[[nodiscard]] const std::vector<File>& evolution_extensions();

[[nodiscard]] std::optional<std::string_view> find_fixture(std::string_view name);
[[nodiscard]] std::optional<std::string_view> find_extension(std::string_view name);

}  // namespace migmeta::embedded
