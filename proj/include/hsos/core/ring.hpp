#pragma once

#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hsos/core/error.hpp"

namespace hsos {

/// The polynomial ring Q(i)[x_1, ..., x_n], identified by its ordered list
/// of variable names. Copies share the name table.
class RingContext {
 public:
  explicit RingContext(std::vector<std::string> names)
      : names_(std::make_shared<const std::vector<std::string>>(validate(std::move(names)))) {}

  /// Ring with variables prefix1..prefixN.
  static RingContext numbered(std::size_t n, const std::string& prefix = "z") {
    std::vector<std::string> names;
    for (std::size_t k = 1; k <= n; ++k) names.push_back(prefix + std::to_string(k));
    return RingContext(std::move(names));
  }

  std::size_t n() const { return names_->size(); }
  const std::vector<std::string>& names() const { return *names_; }
  const std::string& name(std::size_t k) const { return (*names_)[k]; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t k = 0; k < names_->size(); ++k) {
      if ((*names_)[k] == name) return k;
    }
    return std::nullopt;
  }

  /// A new ring with `name` prepended as variable 0.
  RingContext with_leading_variable(const std::string& name) const {
    std::vector<std::string> names{name};
    names.insert(names.end(), names_->begin(), names_->end());
    return RingContext(std::move(names));
  }

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }
  friend bool operator!=(const RingContext& a, const RingContext& b) { return !(a == b); }

  static bool valid_identifier(const std::string& s) {
    if (s.empty() || s == "i") return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s) {
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
  }

 private:
  static std::vector<std::string> validate(std::vector<std::string> names) {
    if (names.empty()) throw DomainError("a ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& s : names) {
      if (!valid_identifier(s)) throw DomainError("invalid variable name '" + s + "'");
      if (!seen.insert(s).second) throw DomainError("duplicate variable name '" + s + "'");
    }
    return names;
  }

  std::shared_ptr<const std::vector<std::string>> names_;
};

inline void require_same_ring(const RingContext& a, const RingContext& b) {
  if (a != b) throw RingMismatch();
}

}  // namespace hsos
