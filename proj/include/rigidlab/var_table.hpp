#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rigidlab {

/// Ordered list of variable names. Names follow `[a-z][a-z0-9]*`, are unique,
/// and keep their index for the table's whole lifetime.
class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Like index_of but throws UnknownVariableError.
  std::size_t require(std::string_view name) const;

  bool operator==(const VarTable& other) const { return names_ == other.names_; }

  static bool valid_name(std::string_view name);

 private:
  std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_vars(std::vector<std::string> names);

inline bool same_vars(const VarTablePtr& a, const VarTablePtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace rigidlab
