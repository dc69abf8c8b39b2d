#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fusionkit/error.hpp"

namespace fusionkit {

/// A finite group given by its Cayley table (0-based element indices).
/// Construction verifies closure, associativity, identity and inverses.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names = {})
      : table_(std::move(table)), names_(std::move(names)) {
    const std::size_t n = table_.size();
    if (n == 0) throw Error(ErrorCode::invalid_definition, "group of order 0");
    for (const auto& row : table_) {
      if (row.size() != n) throw Error(ErrorCode::invalid_definition, "group table is not square");
      for (auto v : row)
        if (v >= n) throw Error(ErrorCode::invalid_definition, "group table entry out of range");
    }
    if (names_.empty()) {
      for (std::size_t i = 0; i < n; ++i) names_.push_back("g" + std::to_string(i));
    }
    if (names_.size() != n) throw Error(ErrorCode::invalid_definition, "group names do not match order");

    std::optional<std::size_t> identity;
    for (std::size_t e = 0; e < n && !identity; ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
      if (ok) identity = e;
    }
    if (!identity) throw Error(ErrorCode::invalid_definition, "group table has no identity");
    identity_ = *identity;

    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (table_[a][b] == identity_ && table_[b][a] == identity_) {
          inverse_[a] = b;
          break;
        }
      }
      if (inverse_[a] == n) throw Error(ErrorCode::invalid_definition, "element " + names_[a] + " has no inverse");
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw Error(ErrorCode::invalid_definition,
                        "group table not associative at (" + names_[a] + ", " + names_[b] + ", " + names_[c] + ")");
  }

  /// Z/n with elements 0..n-1.
  static FiniteGroup cyclic(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a) {
      names.push_back(std::to_string(a));
      for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    }
    return FiniteGroup(std::move(t), std::move(names));
  }

  std::size_t order() const noexcept { return table_.size(); }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_.at(a).at(b); }
  std::size_t inverse(std::size_t a) const { return inverse_.at(a); }
  const std::string& name(std::size_t a) const { return names_.at(a); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }

  std::size_t element_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != identity_; x = multiply(x, a)) ++k;
    return k;
  }

  /// A generator when the group is cyclic.
  std::optional<std::size_t> cyclic_generator() const {
    for (std::size_t a = 0; a < order(); ++a)
      if (element_order(a) == order()) return a;
    return std::nullopt;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::string> names_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

}  // namespace fusionkit
