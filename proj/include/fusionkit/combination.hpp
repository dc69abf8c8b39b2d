#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fusionkit {

/// Nonnegative arbitrary-precision multiplicity.
using Coeff = boost::multiprecision::cpp_int;

/// Finitely supported map from simples to positive multiplicities, i.e. an
/// element of a fusion semiring written in the basis of simples. Iteration is
/// in the canonical order of Key. Zero coefficients are never stored.
template <class Key>
class Combination {
 public:
  using map_type = std::map<Key, Coeff>;

  Combination() = default;
  explicit Combination(const Key& simple, Coeff coeff = 1) { add(simple, std::move(coeff)); }

  /// The unit simple (default-constructed key) with multiplicity n.
  static Combination scalar(Coeff n) { return Combination(Key{}, std::move(n)); }

  void add(const Key& simple, const Coeff& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(simple, coeff);
    if (!inserted) it->second += coeff;
  }

  void add(const Combination& other, const Coeff& scale = 1) {
    if (scale == 0) return;
    for (const auto& [k, c] : other.terms_) add(k, scale == 1 ? c : c * scale);
  }

  Coeff coefficient(const Key& simple) const {
    auto it = terms_.find(simple);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  bool contains(const Key& simple) const { return terms_.count(simple) != 0; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const map_type& terms() const noexcept { return terms_; }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  std::vector<Key> support() const {
    std::vector<Key> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.push_back(k);
    return out;
  }

  /// Sum of coefficients: the number of simple constituents with multiplicity.
  Coeff total() const {
    Coeff t = 0;
    for (const auto& [k, c] : terms_) t += c;
    return t;
  }

  Combination& operator+=(const Combination& other) {
    add(other);
    return *this;
  }
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }

  friend Combination operator*(const Coeff& n, Combination a) {
    if (n == 0) return {};
    for (auto& [k, c] : a.terms_) c *= n;
    return a;
  }

  /// rhs - lhs when it has nonnegative coefficients.
  friend std::optional<Combination> difference(const Combination& lhs, const Combination& rhs) {
    Combination out = rhs;
    for (const auto& [k, c] : lhs.terms_) {
      auto it = out.terms_.find(k);
      if (it == out.terms_.end() || it->second < c) return std::nullopt;
      it->second -= c;
      if (it->second == 0) out.terms_.erase(it);
    }
    return out;
  }

  /// Map every simple through f (which must be injective on the support).
  template <class F>
  auto map_keys(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const Key&>()))>;
    Combination<Out> out;
    for (const auto& [k, c] : terms_) out.add(f(k), c);
    return out;
  }

  friend bool operator==(const Combination&, const Combination&) = default;

 private:
  map_type terms_;
};

/// Bilinear extension of a product defined on simples.
template <class Key, class SimpleProduct>
Combination<Key> bilinear(const Combination<Key>& a, const Combination<Key>& b, SimpleProduct&& simple_product) {
  Combination<Key> out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add(simple_product(x, y), cx * cy);
  return out;
}

}  // namespace fusionkit
