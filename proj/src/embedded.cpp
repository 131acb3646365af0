#include "migmeta/embedded.hpp"

#include <algorithm>
#include <array>

namespace migmeta::embedded {
namespace detail {
const std::vector<File>& all_fixtures();
const std::vector<File>& all_extensions();
}  // namespace detail

namespace {

std::optional<std::string_view> find_in(const std::vector<File>& files, std::string_view name) {
  const auto it = std::find_if(files.begin(), files.end(),
                               [&](const File& f) { return f.name == name; });
  if (it == files.end()) return std::nullopt;
  return it->text;
}

}  // namespace

const std::vector<File>& fixtures() { return detail::all_fixtures(); }

std::vector<File> case_fixtures() {
  std::vector<File> out;
  for (std::string_view name : {"informait", "toas", "springtrader"}) {
    out.push_back({name, *find_fixture(name)});
  }
  return out;
}

const std::vector<File>& evolution_extensions() {
  static const std::vector<File> ordered = [] {
    std::vector<File> out;
    for (std::string_view name : {"use-logging", "resolve-licensing", "define-rollback"}) {
      out.push_back({name, *find_in(detail::all_extensions(), name)});
    }
    return out;
  }();
  return ordered;
}

std::optional<std::string_view> find_fixture(std::string_view name) {
  return find_in(detail::all_fixtures(), name);
}

std::optional<std::string_view> find_extension(std::string_view name) {
  return find_in(detail::all_extensions(), name);
}

}  // namespace migmeta::embedded
