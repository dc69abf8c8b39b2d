#pragma once

// Fusion data (R, *, o): an alphabet with an involution and a partial fusion
// map, plus the extensions of * and o to words over the alphabet.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fusionkit/error.hpp"

namespace fusionkit {

/// Opaque letter identifier. Finite alphabets use indices, cyclic data use
/// residues (or arbitrary integers when the modulus is infinite).
struct Letter {
  std::int64_t id = 0;

  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

/// A word over an alphabet. The empty word names the unit simple.
///
/// Words are ordered length-first, then lexicographically by letter id.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<std::int64_t> ids) {
    letters_.reserve(ids.size());
    for (auto id : ids) letters_.push_back(Letter{id});
  }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  void push_back(Letter l) { letters_.push_back(l); }

  Word slice(std::size_t from, std::size_t to) const {
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(from),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(to)));
  }

  friend Word concat(const Word& a, const Word& b) {
    std::vector<Letter> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.letters_.begin(), a.letters_.end());
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(out));
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
  }

 private:
  std::vector<Letter> letters_;
};

/// Inclusive range of letter ids used to enumerate infinite alphabets.
struct LetterBound {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

enum class Checking { enforce, unchecked };

enum class DatumViolationKind {
  involution_not_involutive,
  fusion_star_incompatible,
  fusion_not_associative,
};

inline std::string_view to_string(DatumViolationKind kind) {
  switch (kind) {
    case DatumViolationKind::involution_not_involutive: return "involution-not-involutive";
    case DatumViolationKind::fusion_star_incompatible: return "fusion-star-incompatible";
    case DatumViolationKind::fusion_not_associative: return "fusion-not-associative";
  }
  return "unknown";
}

struct DatumViolation {
  DatumViolationKind kind;
  std::vector<Letter> witness;
  std::string message;
};

/// Result of validate_datum: empty violation means every axiom holds.
struct DatumReport {
  std::optional<DatumViolation> violation;

  bool ok() const noexcept { return !violation.has_value(); }
};

class FusionDatum;
DatumReport validate_datum(const FusionDatum& datum);

/// A fusion datum. Cheap to copy; immutable after construction.
class FusionDatum {
 public:
  enum class Kind { table, cyclic, disjoint_union };

  using FusionTable = std::map<std::pair<std::size_t, std::size_t>, std::size_t>;

  /// Finite alphabet given by names, an involution (as indices) and the
  /// defined entries of the fusion map.
  static FusionDatum table(std::vector<std::string> names, std::vector<std::size_t> involution,
                           FusionTable fusion, Checking checking = Checking::enforce) {
    if (involution.size() != names.size())
      throw Error(ErrorCode::invalid_definition, "involution size does not match alphabet size");
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (involution[i] >= names.size())
        throw Error(ErrorCode::invalid_definition, "involution of '" + names[i] + "' out of range");
      for (std::size_t j = 0; j < i; ++j)
        if (names[i] == names[j])
          throw Error(ErrorCode::invalid_definition, "duplicate letter name '" + names[i] + "'");
    }
    for (const auto& [key, value] : fusion)
      if (key.first >= names.size() || key.second >= names.size() || value >= names.size())
        throw Error(ErrorCode::invalid_definition, "fusion entry out of range");
    auto impl = std::make_shared<Impl>();
    impl->checked = checking == Checking::enforce;
    impl->data = TableData{std::move(names), std::move(involution), std::move(fusion)};
    FusionDatum d(std::move(impl));
    if (checking == Checking::enforce) d.enforce_axioms();
    return d;
  }

  /// Letters Z/s with x* = -x and x o y = x + y; nullopt means s = infinity.
  static FusionDatum cyclic(std::optional<std::uint64_t> modulus) {
    if (modulus && *modulus == 0)
      throw Error(ErrorCode::invalid_definition, "cyclic modulus must be positive");
    auto impl = std::make_shared<Impl>();
    impl->data = CyclicData{modulus};
    return FusionDatum(std::move(impl));
  }

  /// Disjoint union of data: fusion within parts, undefined across parts.
  /// Letter (part p, local id l) is encoded as l * parts + p.
  static FusionDatum disjoint_union(std::vector<FusionDatum> parts) {
    if (parts.empty()) throw Error(ErrorCode::invalid_definition, "disjoint union of no data");
    auto impl = std::make_shared<Impl>();
    impl->checked = std::all_of(parts.begin(), parts.end(), [](const auto& p) { return p.checked(); });
    impl->data = UnionData{std::move(parts)};
    return FusionDatum(std::move(impl));
  }

  Kind kind() const noexcept {
    return static_cast<Kind>(impl_->data.index());
  }
  bool checked() const noexcept { return impl_->checked; }

  bool finite() const noexcept {
    return std::visit(
        [](const auto& d) {
          using T = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<T, TableData>) return true;
          else if constexpr (std::is_same_v<T, CyclicData>) return d.modulus.has_value();
          else
            return std::all_of(d.parts.begin(), d.parts.end(), [](const auto& p) { return p.finite(); });
        },
        impl_->data);
  }

  std::optional<std::uint64_t> modulus() const {
    if (auto c = std::get_if<CyclicData>(&impl_->data)) return c->modulus;
    throw Error(ErrorCode::defect, "modulus() on a non-cyclic datum");
  }

  const std::vector<FusionDatum>& parts() const {
    if (auto u = std::get_if<UnionData>(&impl_->data)) return u->parts;
    throw Error(ErrorCode::defect, "parts() on a non-union datum");
  }

  std::pair<std::size_t, Letter> split(Letter l) const {
    const auto n = static_cast<std::int64_t>(parts().size());
    std::int64_t part = l.id % n;
    if (part < 0) part += n;
    return {static_cast<std::size_t>(part), Letter{(l.id - part) / n}};
  }

  Letter join(std::size_t part, Letter local) const {
    return Letter{local.id * static_cast<std::int64_t>(parts().size()) + static_cast<std::int64_t>(part)};
  }

  /// Letters of a finite alphabet in increasing id order.
  std::vector<Letter> letters() const {
    if (!finite())
      throw Error(ErrorCode::unbounded_alphabet, "alphabet is infinite; supply a letter bound");
    return letters(LetterBound{});
  }

  /// Letters in increasing id order; the bound only applies to infinite parts.
  std::vector<Letter> letters(LetterBound bound) const {
    std::vector<Letter> out;
    std::visit(
        [&](const auto& d) {
          using T = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<T, TableData>) {
            for (std::size_t i = 0; i < d.names.size(); ++i) out.push_back(Letter{static_cast<std::int64_t>(i)});
          } else if constexpr (std::is_same_v<T, CyclicData>) {
            if (d.modulus) {
              for (std::uint64_t i = 0; i < *d.modulus; ++i) out.push_back(Letter{static_cast<std::int64_t>(i)});
            } else {
              for (auto i = bound.lo; i <= bound.hi; ++i) out.push_back(Letter{i});
            }
          } else {
            for (std::size_t p = 0; p < d.parts.size(); ++p)
              for (Letter l : d.parts[p].letters(bound)) out.push_back(join(p, l));
            std::sort(out.begin(), out.end());
          }
        },
        impl_->data);
    return out;
  }

  bool contains(Letter l) const {
    return std::visit(
        [&](const auto& d) -> bool {
          using T = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<T, TableData>) {
            return l.id >= 0 && static_cast<std::size_t>(l.id) < d.names.size();
          } else if constexpr (std::is_same_v<T, CyclicData>) {
            return !d.modulus || (l.id >= 0 && static_cast<std::uint64_t>(l.id) < *d.modulus);
          } else {
            auto [p, local] = split(l);
            return d.parts[p].contains(local);
          }
        },
        impl_->data);
  }

  Letter star(Letter l) const {
    return std::visit(
        [&](const auto& d) -> Letter {
          using T = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<T, TableData>) {
            return Letter{static_cast<std::int64_t>(d.involution.at(static_cast<std::size_t>(l.id)))};
          } else if constexpr (std::is_same_v<T, CyclicData>) {
            return Letter{reduce(d.modulus, -l.id)};
          } else {
            auto [p, local] = split(l);
            return join(p, d.parts[p].star(local));
          }
        },
        impl_->data);
  }

  std::optional<Letter> fuse(Letter a, Letter b) const {
    return std::visit(
        [&](const auto& d) -> std::optional<Letter> {
          using T = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<T, TableData>) {
            auto it = d.fusion.find({static_cast<std::size_t>(a.id), static_cast<std::size_t>(b.id)});
            if (it == d.fusion.end()) return std::nullopt;
            return Letter{static_cast<std::int64_t>(it->second)};
          } else if constexpr (std::is_same_v<T, CyclicData>) {
            return Letter{reduce(d.modulus, a.id + b.id)};
          } else {
            auto [pa, la] = split(a);
            auto [pb, lb] = split(b);
            if (pa != pb) return std::nullopt;
            auto f = d.parts[pa].fuse(la, lb);
            if (!f) return std::nullopt;
            return join(pa, *f);
          }
        },
        impl_->data);
  }

  /// Display name of a letter. Union letters get an "@part" suffix (1-based)
  /// only when their bare name is ambiguous.
  std::string name(Letter l) const {
    return std::visit(
        [&](const auto& d) -> std::string {
          using T = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<T, TableData>) {
            return d.names.at(static_cast<std::size_t>(l.id));
          } else if constexpr (std::is_same_v<T, CyclicData>) {
            return std::to_string(l.id);
          } else {
            auto [p, local] = split(l);
            std::string bare = d.parts[p].name(local);
            for (std::size_t q = 0; q < d.parts.size(); ++q)
              if (q != p && d.parts[q].parse_letter(bare)) return bare + "@" + std::to_string(p + 1);
            return bare;
          }
        },
        impl_->data);
  }

  std::optional<Letter> parse_letter(std::string_view text) const {
    return std::visit(
        [&](const auto& d) -> std::optional<Letter> {
          using T = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<T, TableData>) {
            for (std::size_t i = 0; i < d.names.size(); ++i)
              if (d.names[i] == text) return Letter{static_cast<std::int64_t>(i)};
            return std::nullopt;
          } else if constexpr (std::is_same_v<T, CyclicData>) {
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
            return Letter{reduce(d.modulus, value)};
          } else {
            if (auto at = text.rfind('@'); at != std::string_view::npos) {
              std::size_t part = 0;
              auto digits = text.substr(at + 1);
              auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), part);
              if (ec == std::errc{} && ptr == digits.data() + digits.size() && part >= 1 &&
                  part <= d.parts.size()) {
                if (auto l = d.parts[part - 1].parse_letter(text.substr(0, at))) return join(part - 1, *l);
                return std::nullopt;
              }
            }
            std::optional<Letter> found;
            for (std::size_t p = 0; p < d.parts.size(); ++p) {
              if (auto l = d.parts[p].parse_letter(text)) {
                if (found) return std::nullopt;  // ambiguous
                found = join(p, *l);
              }
            }
            return found;
          }
        },
        impl_->data);
  }

  friend bool operator==(const FusionDatum& a, const FusionDatum& b) {
    return a.impl_ == b.impl_ || a.impl_->data == b.impl_->data;
  }

 private:
  struct TableData {
    std::vector<std::string> names;
    std::vector<std::size_t> involution;
    FusionTable fusion;
    friend bool operator==(const TableData&, const TableData&) = default;
  };
  struct CyclicData {
    std::optional<std::uint64_t> modulus;
    friend bool operator==(const CyclicData&, const CyclicData&) = default;
  };
  struct UnionData {
    std::vector<FusionDatum> parts;
    friend bool operator==(const UnionData&, const UnionData&) = default;
  };
  struct Impl {
    bool checked = true;
    std::variant<TableData, CyclicData, UnionData> data;
  };

  explicit FusionDatum(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  static std::int64_t reduce(std::optional<std::uint64_t> modulus, std::int64_t value) {
    if (!modulus) return value;
    const auto s = static_cast<std::int64_t>(*modulus);
    auto r = value % s;
    return r < 0 ? r + s : r;
  }

  void enforce_axioms() const {
    auto report = validate_datum(*this);
    if (!report.ok()) throw Error(ErrorCode::invalid_datum, report.violation->message);
  }

  std::shared_ptr<const Impl> impl_;
};

// ---------------------------------------------------------------------------
// Word operations

/// Reverse the word and apply the involution letterwise.
inline Word word_dual(const FusionDatum& datum, const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(datum.star(*it));
  return Word(std::move(out));
}

/// (r1..rk) o (s1..sl) = r1..r(k-1) (rk o s1) s2..sl; nullopt when either
/// word is empty or rk o s1 is undefined.
inline std::optional<Word> word_fusion(const FusionDatum& datum, const Word& v, const Word& w) {
  if (v.empty() || w.empty()) return std::nullopt;
  auto fused = datum.fuse(v.back(), w.front());
  if (!fused) return std::nullopt;
  std::vector<Letter> out;
  out.reserve(v.size() + w.size() - 1);
  out.insert(out.end(), v.begin(), v.end() - 1);
  out.push_back(*fused);
  out.insert(out.end(), w.begin() + 1, w.end());
  return Word(std::move(out));
}

inline bool word_valid(const FusionDatum& datum, const Word& w) {
  return std::all_of(w.begin(), w.end(), [&](Letter l) { return datum.contains(l); });
}

inline std::string format_word(const FusionDatum& datum, const Word& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += datum.name(w[i]);
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// Validation

namespace detail {

inline DatumReport validate_finite(const FusionDatum& d) {
  const auto letters = d.letters();
  auto nm = [&](Letter l) { return d.name(l); };
  for (Letter r : letters) {
    if (d.star(d.star(r)) != r) {
      return {DatumViolation{DatumViolationKind::involution_not_involutive, {r},
                             "(" + nm(r) + "*)* = " + nm(d.star(d.star(r))) + " != " + nm(r)}};
    }
  }
  for (Letter r : letters) {
    for (Letter s : letters) {
      auto rs = d.fuse(r, s);
      auto dual = d.fuse(d.star(s), d.star(r));
      if (rs.has_value() != dual.has_value() || (rs && d.star(*rs) != *dual)) {
        std::string lhs = rs ? nm(d.star(*rs)) : "undefined";
        std::string rhs = dual ? nm(*dual) : "undefined";
        return {DatumViolation{DatumViolationKind::fusion_star_incompatible, {r, s},
                               "(" + nm(r) + " o " + nm(s) + ")* = " + lhs + " but " + nm(d.star(s)) +
                                   " o " + nm(d.star(r)) + " = " + rhs}};
      }
    }
  }
  for (Letter r : letters) {
    for (Letter s : letters) {
      auto rs = d.fuse(r, s);
      for (Letter t : letters) {
        auto st = d.fuse(s, t);
        std::optional<Letter> left = rs ? d.fuse(*rs, t) : std::nullopt;
        std::optional<Letter> right = st ? d.fuse(r, *st) : std::nullopt;
        if (left != right) {
          return {DatumViolation{DatumViolationKind::fusion_not_associative, {r, s, t},
                                 "(" + nm(r) + " o " + nm(s) + ") o " + nm(t) + " = " +
                                     (left ? nm(*left) : "undefined") + " but " + nm(r) + " o (" + nm(s) +
                                     " o " + nm(t) + ") = " + (right ? nm(*right) : "undefined")}};
        }
      }
    }
  }
  return {};
}

}  // namespace detail

/// Checks involutivity, *-compatibility and associativity of the fusion.
/// Finite tables are checked exhaustively; cyclic data satisfy the axioms by
/// construction (group laws of Z/s); unions are valid iff every part is.
inline DatumReport validate_datum(const FusionDatum& datum) {
  switch (datum.kind()) {
    case FusionDatum::Kind::cyclic:
      return {};
    case FusionDatum::Kind::disjoint_union: {
      const auto& parts = datum.parts();
      for (std::size_t p = 0; p < parts.size(); ++p) {
        auto report = validate_datum(parts[p]);
        if (!report.ok()) {
          for (auto& l : report.violation->witness) l = datum.join(p, l);
          report.violation->message = "part " + std::to_string(p + 1) + ": " + report.violation->message;
          return report;
        }
      }
      return {};
    }
    case FusionDatum::Kind::table:
      break;
  }
  return detail::validate_finite(datum);
}

// ---------------------------------------------------------------------------
// Catalog

namespace catalog {

/// Free unitary quantum group: free on ({a, a*}, *) with empty fusion.
inline FusionDatum au() { return FusionDatum::table({"a", "a*"}, {1, 0}, {}); }

/// Free orthogonal quantum group (SU(2)-type fusion): ({r}, r* = r), empty fusion.
inline FusionDatum bu() { return FusionDatum::table({"r"}, {0}, {}); }

/// Quantum automorphism group (SO(3)-type fusion): r* = r, r o r = r.
inline FusionDatum aaut() { return FusionDatum::table({"r"}, {0}, {{{0, 0}, 0}}); }

/// Quantum reflection group A_h^s: Z/s with x* = -x, x o y = x + y.
inline FusionDatum reflection(std::optional<std::uint64_t> s) { return FusionDatum::cyclic(s); }

}  // namespace catalog

}  // namespace fusionkit
