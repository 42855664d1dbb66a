#include "rigidlab/var_table.hpp"

#include <algorithm>
#include <set>

#include "rigidlab/errors.hpp"

namespace rigidlab {

bool VarTable::valid_name(std::string_view name) {
  if (name.empty() || name.front() < 'a' || name.front() > 'z') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
  });
}

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!valid_name(n)) throw InputError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw InputError("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t VarTable::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw UnknownVariableError(std::string(name));
}

VarTablePtr make_vars(std::vector<std::string> names) {
  return std::make_shared<const VarTable>(std::move(names));
}

}  // namespace rigidlab
