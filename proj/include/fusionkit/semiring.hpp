#pragma once

// The fusion semiring free on a datum (R, *, o):
//
//   a_x a_y = sum over x = v g, y = g* w of (a_{vw} + a_{v o w}),
//
// with the a_{v o w} term absent when v o w is undefined.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "fusionkit/combination.hpp"
#include "fusionkit/datum.hpp"

namespace fusionkit {

/// Product of two simples a_x a_y in the semiring free on `datum`.
///
/// g ranges over the suffixes of x whose dual is a prefix of y, shortest
/// first; once g* fails to be a prefix, every longer suffix fails as well.
inline Combination<Word> multiply(const FusionDatum& datum, const Word& x, const Word& y) {
  Combination<Word> out;
  const std::size_t common = std::min(x.size(), y.size());
  for (std::size_t k = 0; k <= common; ++k) {
    if (k > 0 && y[k - 1] != datum.star(x[x.size() - k])) break;
    Word v = x.slice(0, x.size() - k);
    Word w = y.slice(k, y.size());
    if (auto fused = word_fusion(datum, v, w)) out.add(*fused, 1);
    out.add(concat(v, w), 1);
  }
  return out;
}

inline Combination<Word> multiply(const FusionDatum& datum, const Combination<Word>& a, const Combination<Word>& b) {
  return bilinear(a, b, [&](const Word& x, const Word& y) { return multiply(datum, x, y); });
}

inline Combination<Word> dual(const FusionDatum& datum, const Combination<Word>& a) {
  return a.map_keys([&](const Word& w) { return word_dual(datum, w); });
}

/// An element of the fusion semiring R+ over a fixed datum.
class SemiringElement {
 public:
  explicit SemiringElement(FusionDatum datum) : datum_(std::move(datum)) {}
  SemiringElement(FusionDatum datum, Combination<Word> terms) : datum_(std::move(datum)), terms_(std::move(terms)) {
    for (const auto& [w, c] : terms_)
      if (!word_valid(datum_, w)) throw Error(ErrorCode::not_a_simple, "word not over the datum alphabet");
  }

  static SemiringElement unit(FusionDatum datum) { return simple(std::move(datum), Word{}); }
  static SemiringElement simple(FusionDatum datum, Word w) {
    return SemiringElement(std::move(datum), Combination<Word>(std::move(w)));
  }

  const FusionDatum& datum() const noexcept { return datum_; }
  const Combination<Word>& terms() const noexcept { return terms_; }
  Coeff coefficient(const Word& w) const { return terms_.coefficient(w); }

  friend bool operator==(const SemiringElement& a, const SemiringElement& b) {
    return a.datum_ == b.datum_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      if (!out.empty()) out += " + ";
      if (w.empty()) {
        out += c.str();
      } else {
        if (c != 1) out += c.str() + " ";
        out += format_word(datum_, w);
      }
    }
    return out;
  }

 private:
  FusionDatum datum_;
  Combination<Word> terms_;
};

namespace detail {
inline void require_same_datum(const SemiringElement& a, const SemiringElement& b) {
  if (!(a.datum() == b.datum())) throw Error(ErrorCode::datum_mismatch, "elements belong to different data");
}
}  // namespace detail

inline SemiringElement product(const SemiringElement& a, const SemiringElement& b) {
  detail::require_same_datum(a, b);
  return SemiringElement(a.datum(), multiply(a.datum(), a.terms(), b.terms()));
}

inline SemiringElement sum(const SemiringElement& a, const SemiringElement& b) {
  detail::require_same_datum(a, b);
  return SemiringElement(a.datum(), a.terms() + b.terms());
}

inline SemiringElement dual(const SemiringElement& a) {
  return SemiringElement(a.datum(), dual(a.datum(), a.terms()));
}

/// lhs <= rhs in the positive cone: rhs = lhs + difference.
struct OrderWitness {
  SemiringElement lhs;
  SemiringElement rhs;
  SemiringElement difference;
};

inline std::optional<OrderWitness> leq(const SemiringElement& a, const SemiringElement& b) {
  detail::require_same_datum(a, b);
  auto diff = difference(a.terms(), b.terms());
  if (!diff) return std::nullopt;
  return OrderWitness{a, b, SemiringElement(a.datum(), std::move(*diff))};
}

// ---------------------------------------------------------------------------
// Dimensions

using LetterDimensions = std::function<Coeff(Letter)>;

inline LetterDimensions letter_dimensions(std::map<Letter, Coeff> table) {
  return [table = std::move(table)](Letter l) {
    auto it = table.find(l);
    if (it == table.end())
      throw Error(ErrorCode::inconsistent_dimension, "no dimension for letter " + std::to_string(l.id));
    return it->second;
  };
}

/// Computes dim a_x recursively from a_x a_r = a_{xr} + (shorter terms).
/// Not thread-safe; construct one per thread.
class DimensionFunction {
 public:
  DimensionFunction(FusionDatum datum, LetterDimensions letter_dims)
      : datum_(std::move(datum)), letter_dims_(std::move(letter_dims)) {}

  Coeff operator()(const Word& w) {
    if (w.empty()) return 1;
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    Coeff value;
    const Letter last = w.back();
    const Coeff last_dim = letter_dim(last);
    if (w.size() == 1) {
      value = last_dim;
    } else {
      Word prefix = w.slice(0, w.size() - 1);
      value = (*this)(prefix) * last_dim;
      for (const auto& [t, c] : multiply(datum_, prefix, Word(std::vector<Letter>{last}))) {
        if (t == w) continue;
        value -= c * (*this)(t);
      }
    }
    if (value <= 0)
      throw Error(ErrorCode::inconsistent_dimension,
                  "dimension of " + format_word(datum_, w) + " would be " + value.str());
    memo_.emplace(w, value);
    return value;
  }

  Coeff operator()(const Combination<Word>& element) {
    Coeff total = 0;
    for (const auto& [w, c] : element) total += c * (*this)(w);
    return total;
  }

 private:
  Coeff letter_dim(Letter l) {
    Coeff d = letter_dims_(l);
    if (d <= 0)
      throw Error(ErrorCode::inconsistent_dimension, "letter " + datum_.name(l) + " has non-positive dimension");
    if (letter_dims_(datum_.star(l)) != d)
      throw Error(ErrorCode::inconsistent_dimension, "dim " + datum_.name(l) + " != dim of its dual");
    return d;
  }

  FusionDatum datum_;
  LetterDimensions letter_dims_;
  std::map<Word, Coeff> memo_;
};

inline Coeff dimension(const FusionDatum& datum, const Word& w, LetterDimensions letter_dims) {
  DimensionFunction dim(datum, std::move(letter_dims));
  return dim(w);
}

// ---------------------------------------------------------------------------
// Enumeration and empirical checks

/// All words of length <= max_len in canonical order.
inline std::vector<Word> enumerate_words(const FusionDatum& datum, std::size_t max_len,
                                         std::optional<LetterBound> bound = std::nullopt) {
  if (!datum.finite() && !bound)
    throw Error(ErrorCode::unbounded_alphabet, "infinite alphabet requires a letter bound");
  const auto alphabet = bound ? datum.letters(*bound) : datum.letters();
  std::vector<Word> out{Word{}};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (Letter l : alphabet) {
        Word w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

/// A triple of simples on which (xy)z != x(yz).
struct AssociativityFailure {
  Word x, y, z;
  Combination<Word> left, right;
};

/// Bounded associativity test, meant as a diagnostic for data built with
/// Checking::unchecked.
inline std::optional<AssociativityFailure> find_associativity_failure(const FusionDatum& datum, std::size_t max_len,
                                                                      std::optional<LetterBound> bound = std::nullopt) {
  const auto words = enumerate_words(datum, max_len, bound);
  for (const auto& x : words) {
    for (const auto& y : words) {
      const auto xy = multiply(datum, x, y);
      for (const auto& z : words) {
        auto left = multiply(datum, xy, Combination<Word>(z));
        auto right = multiply(datum, Combination<Word>(x), multiply(datum, y, z));
        if (left != right) return AssociativityFailure{x, y, z, std::move(left), std::move(right)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace fusionkit
