#pragma once

// Abstract fusion rings. A Ring is a free product of one or more atomic
// rings (free-datum, finite-group or finite-table backends); a ring with a
// single factor is just that factor. Nested free products are flattened.
//
// A simple of a free product is an alternating string x_1 ... x_n of
// nontrivial factor simples. It is stored flat as a sequence of atoms
// (factor, letter); maximal runs of one factor are the syllables. Runs in
// finite-group and finite-table factors have length exactly one.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fusionkit/combination.hpp"
#include "fusionkit/datum.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/finite_group.hpp"
#include "fusionkit/semiring.hpp"

namespace fusionkit {

struct Atom {
  std::uint32_t factor = 0;
  Letter letter;

  friend constexpr auto operator<=>(const Atom&, const Atom&) = default;
};

/// A simple of a Ring. Ordered length-first, then lexicographically.
class Simple {
 public:
  Simple() = default;
  explicit Simple(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}

  /// Single-factor simple from a word.
  static Simple from_word(const Word& w, std::uint32_t factor = 0) {
    std::vector<Atom> atoms;
    atoms.reserve(w.size());
    for (Letter l : w) atoms.push_back(Atom{factor, l});
    return Simple(std::move(atoms));
  }

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  std::size_t length() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }
  const Atom& operator[](std::size_t i) const { return atoms_[i]; }
  const Atom& front() const { return atoms_.front(); }
  const Atom& back() const { return atoms_.back(); }

  Simple slice(std::size_t from, std::size_t to) const {
    return Simple(std::vector<Atom>(atoms_.begin() + static_cast<std::ptrdiff_t>(from),
                                    atoms_.begin() + static_cast<std::ptrdiff_t>(to)));
  }

  /// Letters of the simple, ignoring factors.
  Word word() const {
    std::vector<Letter> out;
    out.reserve(atoms_.size());
    for (const auto& a : atoms_) out.push_back(a.letter);
    return Word(std::move(out));
  }

  friend bool operator==(const Simple&, const Simple&) = default;
  friend std::strong_ordering operator<=>(const Simple& a, const Simple& b) {
    if (auto c = a.atoms_.size() <=> b.atoms_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.atoms_.begin(), a.atoms_.end(), b.atoms_.begin(),
                                                  b.atoms_.end());
  }

 private:
  std::vector<Atom> atoms_;
};

/// One syllable of a free-product simple: a nontrivial simple of one factor.
struct Syllable {
  std::uint32_t factor = 0;
  Word word;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// ---------------------------------------------------------------------------
// Finite fusion tables

/// Explicit fusion coefficients N^z_{xy} on finitely many simples. The first
/// simple is the unit; products with the unit may be left out of `products`.
class FusionRingTable {
 public:
  using Products = std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Coeff>>;

  FusionRingTable(std::vector<std::string> names, std::vector<std::size_t> dual, Products products)
      : names_(std::move(names)), dual_(std::move(dual)) {
    const std::size_t n = names_.size();
    if (n == 0) throw Error(ErrorCode::invalid_definition, "fusion table without simples");
    if (dual_.size() != n) throw Error(ErrorCode::invalid_definition, "dual list does not match simples");
    for (auto d : dual_)
      if (d >= n) throw Error(ErrorCode::invalid_definition, "dual index out of range");
    n_.assign(n, std::vector<Combination<std::size_t>>(n));
    for (const auto& [key, row] : products) {
      if (key.first >= n || key.second >= n) throw Error(ErrorCode::invalid_definition, "product index out of range");
      for (const auto& [z, c] : row) {
        if (z >= n) throw Error(ErrorCode::invalid_definition, "product constituent out of range");
        if (c < 0) throw Error(ErrorCode::invalid_definition, "negative fusion coefficient");
        n_[key.first][key.second].add(z, c);
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (auto [a, b] : {std::pair{std::size_t{0}, x}, std::pair{x, std::size_t{0}}}) {
        if (n_[a][b].empty()) n_[a][b] = Combination<std::size_t>(x);
        if (n_[a][b] != Combination<std::size_t>(x))
          throw Error(ErrorCode::invalid_definition, "the first simple does not act as the unit on " + names_[x]);
      }
    }
    if (auto problem = find_violation()) throw Error(ErrorCode::invalid_definition, *problem);
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t x) const { return names_.at(x); }
  std::size_t dual(std::size_t x) const { return dual_.at(x); }
  const Combination<std::size_t>& product(std::size_t x, std::size_t y) const { return n_.at(x).at(y); }

  friend bool operator==(const FusionRingTable& a, const FusionRingTable& b) {
    return a.names_ == b.names_ && a.dual_ == b.dual_ && a.n_ == b.n_;
  }

 private:
  std::optional<std::string> find_violation() const {
    const std::size_t n = size();
    if (dual_[0] != 0) return "dual of the unit is not the unit";
    for (std::size_t x = 0; x < n; ++x)
      if (dual_[dual_[x]] != x) return "duality is not an involution at " + names_[x];
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const Coeff expected = y == dual_[x] ? 1 : 0;
        if (n_[x][y].coefficient(0) != expected)
          return "unit multiplicity in " + names_[x] + "*" + names_[y] + " is " + n_[x][y].coefficient(0).str();
        auto reversed = n_[dual_[y]][dual_[x]].map_keys([&](std::size_t z) { return dual_[z]; });
        if (reversed != n_[x][y]) return "duality is not anti-multiplicative at (" + names_[x] + ", " + names_[y] + ")";
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          Combination<std::size_t> left, right;
          for (const auto& [w, c] : n_[x][y]) left.add(n_[w][z], c);
          for (const auto& [w, c] : n_[y][z]) right.add(n_[x][w], c);
          if (left != right)
            return "fusion table not associative at (" + names_[x] + ", " + names_[y] + ", " + names_[z] + ")";
        }
      }
    }
    return std::nullopt;
  }

  std::vector<std::string> names_;
  std::vector<std::size_t> dual_;
  std::vector<std::vector<Combination<std::size_t>>> n_;
};

// ---------------------------------------------------------------------------
// Atomic rings

/// A fusion ring that is not itself a free product. Simples are words: any
/// word for the free-datum backend, and words of length <= 1 (the letter is
/// the element or table index) for the other two.
class AtomicRing {
 public:
  enum class Backend { free_datum, finite_group, finite_table };

  virtual ~AtomicRing() = default;

  virtual Backend backend() const = 0;
  virtual std::string label() const = 0;
  virtual bool finite_alphabet() const = 0;
  /// Whether nontrivial simples may span several letters.
  bool multi_letter() const { return backend() == Backend::free_datum; }
  /// Whether l names a nontrivial simple (or a letter, for free data).
  virtual bool contains(Letter l) const = 0;
  virtual std::vector<Letter> letters(std::optional<LetterBound> bound) const = 0;
  virtual Word dual(const Word& w) const = 0;
  virtual Combination<Word> product(const Word& x, const Word& y) const = 0;
  virtual std::string letter_name(Letter l) const = 0;
  virtual std::optional<Letter> parse_letter(std::string_view text) const = 0;
};

class FreeDatumRing final : public AtomicRing {
 public:
  FreeDatumRing(FusionDatum datum, std::string label) : datum_(std::move(datum)), label_(std::move(label)) {}

  const FusionDatum& datum() const noexcept { return datum_; }

  Backend backend() const override { return Backend::free_datum; }
  std::string label() const override { return label_; }
  bool finite_alphabet() const override { return datum_.finite(); }
  bool contains(Letter l) const override { return datum_.contains(l); }
  std::vector<Letter> letters(std::optional<LetterBound> bound) const override {
    if (!datum_.finite() && !bound)
      throw Error(ErrorCode::unbounded_alphabet, label_ + " has an infinite alphabet; supply a letter bound");
    return bound ? datum_.letters(*bound) : datum_.letters();
  }
  Word dual(const Word& w) const override { return word_dual(datum_, w); }
  Combination<Word> product(const Word& x, const Word& y) const override { return multiply(datum_, x, y); }
  std::string letter_name(Letter l) const override { return datum_.name(l); }
  std::optional<Letter> parse_letter(std::string_view text) const override { return datum_.parse_letter(text); }

 private:
  FusionDatum datum_;
  std::string label_;
};

class GroupRing final : public AtomicRing {
 public:
  GroupRing(FiniteGroup group, std::string label) : group_(std::move(group)), label_(std::move(label)) {}

  const FiniteGroup& group() const noexcept { return group_; }

  Backend backend() const override { return Backend::finite_group; }
  std::string label() const override { return label_; }
  bool finite_alphabet() const override { return true; }
  bool contains(Letter l) const override {
    return l.id >= 0 && static_cast<std::size_t>(l.id) < group_.order() &&
           static_cast<std::size_t>(l.id) != group_.identity();
  }
  std::vector<Letter> letters(std::optional<LetterBound>) const override {
    std::vector<Letter> out;
    for (std::size_t g = 0; g < group_.order(); ++g)
      if (g != group_.identity()) out.push_back(Letter{static_cast<std::int64_t>(g)});
    return out;
  }
  Word dual(const Word& w) const override {
    if (w.empty()) return w;
    return Word{static_cast<std::int64_t>(group_.inverse(static_cast<std::size_t>(w[0].id)))};
  }
  Combination<Word> product(const Word& x, const Word& y) const override {
    const auto g = x.empty() ? group_.identity() : static_cast<std::size_t>(x[0].id);
    const auto h = y.empty() ? group_.identity() : static_cast<std::size_t>(y[0].id);
    const auto gh = group_.multiply(g, h);
    return Combination<Word>(gh == group_.identity() ? Word{} : Word{static_cast<std::int64_t>(gh)});
  }
  std::string letter_name(Letter l) const override { return group_.name(static_cast<std::size_t>(l.id)); }
  std::optional<Letter> parse_letter(std::string_view text) const override {
    for (std::size_t g = 0; g < group_.order(); ++g)
      if (g != group_.identity() && group_.name(g) == text) return Letter{static_cast<std::int64_t>(g)};
    return std::nullopt;
  }

 private:
  FiniteGroup group_;
  std::string label_;
};

class TableRing final : public AtomicRing {
 public:
  TableRing(FusionRingTable table, std::string label) : table_(std::move(table)), label_(std::move(label)) {}

  const FusionRingTable& table() const noexcept { return table_; }

  Backend backend() const override { return Backend::finite_table; }
  std::string label() const override { return label_; }
  bool finite_alphabet() const override { return true; }
  bool contains(Letter l) const override {
    return l.id > 0 && static_cast<std::size_t>(l.id) < table_.size();
  }
  std::vector<Letter> letters(std::optional<LetterBound>) const override {
    std::vector<Letter> out;
    for (std::size_t x = 1; x < table_.size(); ++x) out.push_back(Letter{static_cast<std::int64_t>(x)});
    return out;
  }
  Word dual(const Word& w) const override {
    if (w.empty()) return w;
    return Word{static_cast<std::int64_t>(table_.dual(static_cast<std::size_t>(w[0].id)))};
  }
  Combination<Word> product(const Word& x, const Word& y) const override {
    const auto a = x.empty() ? 0 : static_cast<std::size_t>(x[0].id);
    const auto b = y.empty() ? 0 : static_cast<std::size_t>(y[0].id);
    return table_.product(a, b).map_keys(
        [](std::size_t z) { return z == 0 ? Word{} : Word{static_cast<std::int64_t>(z)}; });
  }
  std::string letter_name(Letter l) const override { return table_.name(static_cast<std::size_t>(l.id)); }
  std::optional<Letter> parse_letter(std::string_view text) const override {
    for (std::size_t x = 1; x < table_.size(); ++x)
      if (table_.name(x) == text) return Letter{static_cast<std::int64_t>(x)};
    return std::nullopt;
  }

 private:
  FusionRingTable table_;
  std::string label_;
};

// ---------------------------------------------------------------------------
// Ring handle

/// Immutable handle on a fusion ring; cheap to copy.
class Ring {
 public:
  static Ring free(FusionDatum datum, std::string label = "datum") {
    return Ring({std::make_shared<FreeDatumRing>(std::move(datum), std::move(label))});
  }
  static Ring group(FiniteGroup group, std::string label = "group") {
    return Ring({std::make_shared<GroupRing>(std::move(group), std::move(label))});
  }
  static Ring table(FusionRingTable table, std::string label = "table") {
    return Ring({std::make_shared<TableRing>(std::move(table), std::move(label))});
  }
  static Ring free_product(const std::vector<Ring>& rings) {
    if (rings.empty()) throw Error(ErrorCode::invalid_definition, "free product of no rings");
    std::vector<std::shared_ptr<const AtomicRing>> factors;
    for (const auto& r : rings) factors.insert(factors.end(), r.factors_.begin(), r.factors_.end());
    return Ring(std::move(factors));
  }

  std::size_t factor_count() const noexcept { return factors_.size(); }
  const AtomicRing& factor(std::size_t i) const { return *factors_.at(i); }
  /// The single-factor ring made of factor i.
  Ring factor_ring(std::size_t i) const { return Ring({factors_.at(i)}); }

  std::string name() const {
    std::string out;
    for (const auto& f : factors_) {
      if (!out.empty()) out += "*";
      out += f->label();
    }
    return out;
  }

  bool finite_alphabet() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const auto& f) { return f->finite_alphabet(); });
  }

  // --- simples -------------------------------------------------------------

  bool is_simple(const Simple& x) const {
    for (std::size_t i = 0; i < x.length(); ++i) {
      const auto& a = x[i];
      if (a.factor >= factors_.size() || !factors_[a.factor]->contains(a.letter)) return false;
      if (i > 0 && x[i - 1].factor == a.factor && !factors_[a.factor]->multi_letter()) return false;
    }
    return true;
  }

  void require_simple(const Simple& x) const {
    if (!is_simple(x)) throw Error(ErrorCode::not_a_simple, format(x) + " is not a simple of " + name());
  }

  std::vector<Syllable> syllables(const Simple& x) const {
    std::vector<Syllable> out;
    for (const auto& a : x.atoms()) {
      if (out.empty() || out.back().factor != a.factor || !factors_[a.factor]->multi_letter())
        out.push_back(Syllable{a.factor, Word{}});
      out.back().word.push_back(a.letter);
    }
    return out;
  }

  static Simple from_syllables(const std::vector<Syllable>& syllables) {
    std::vector<Atom> atoms;
    for (const auto& s : syllables)
      for (Letter l : s.word) atoms.push_back(Atom{s.factor, l});
    return Simple(std::move(atoms));
  }

  Simple unit() const { return Simple{}; }

  Simple dual(const Simple& x) const {
    auto parts = syllables(x);
    std::reverse(parts.begin(), parts.end());
    for (auto& s : parts) s.word = factors_[s.factor]->dual(s.word);
    return from_syllables(parts);
  }

  Combination<Simple> dual(const Combination<Simple>& a) const {
    return a.map_keys([&](const Simple& x) { return dual(x); });
  }

  // --- products ------------------------------------------------------------

  /// Full decomposition of x y into simples.
  ///
  /// With x = x_1..x_n and y = y_1..y_l: when x_n and y_1 lie in different
  /// factors the product is the concatenation; otherwise x_n y_1 is
  /// decomposed inside the factor, each nontrivial constituent v replaces
  /// the pair, and the unit constituent (present iff y_1 = x_n*) recurses on
  /// (x_1..x_{n-1})(y_2..y_l).
  Combination<Simple> product(const Simple& x, const Simple& y) const {
    require_simple(x);
    require_simple(y);
    return product_unchecked(x, y, x.length() + y.length());
  }

  Combination<Simple> product(const Combination<Simple>& a, const Combination<Simple>& b) const {
    return bilinear(a, b, [&](const Simple& x, const Simple& y) { return product(x, y); });
  }

  // --- enumeration ---------------------------------------------------------

  /// All simples of length <= max_len in canonical order. Length counts
  /// letters: a free-datum syllable contributes its word length, a
  /// group or table syllable contributes one.
  std::vector<Simple> enumerate_simples(std::size_t max_len, std::optional<LetterBound> bound = std::nullopt) const {
    std::vector<Atom> alphabet;
    for (std::uint32_t f = 0; f < factors_.size(); ++f) {
      if (!factors_[f]->finite_alphabet() && !bound)
        throw Error(ErrorCode::unbounded_alphabet,
                    "factor " + factors_[f]->label() + " has an infinite alphabet; supply a letter bound");
      for (Letter l : factors_[f]->letters(bound)) alphabet.push_back(Atom{f, l});
    }
    std::sort(alphabet.begin(), alphabet.end());
    std::vector<Simple> out{Simple{}};
    std::size_t layer_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
      const std::size_t layer_end = out.size();
      for (std::size_t i = layer_begin; i < layer_end; ++i) {
        for (const Atom& a : alphabet) {
          const Simple& prev = out[i];
          if (!prev.empty() && prev.back().factor == a.factor && !factors_[a.factor]->multi_letter()) continue;
          std::vector<Atom> atoms = prev.atoms();
          atoms.push_back(a);
          out.emplace_back(std::move(atoms));
        }
      }
      layer_begin = layer_end;
    }
    return out;
  }

  // --- names ---------------------------------------------------------------

  /// Letter name, suffixed with "@factor" (1-based) when ambiguous.
  std::string atom_name(const Atom& a) const {
    if (a.factor >= factors_.size()) return std::to_string(a.letter.id) + "@" + std::to_string(a.factor + 1);
    std::string bare = factors_.at(a.factor)->letter_name(a.letter);
    for (std::uint32_t f = 0; f < factors_.size(); ++f)
      if (f != a.factor && factors_[f]->parse_letter(bare)) return bare + "@" + std::to_string(a.factor + 1);
    return bare;
  }

  std::optional<Atom> parse_atom(std::string_view text) const {
    if (auto at = text.rfind('@'); at != std::string_view::npos && factors_.size() > 1) {
      std::string digits(text.substr(at + 1));
      if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        auto f = std::stoul(digits);
        if (f >= 1 && f <= factors_.size()) {
          if (auto l = factors_[f - 1]->parse_letter(text.substr(0, at)))
            return Atom{static_cast<std::uint32_t>(f - 1), *l};
          return std::nullopt;
        }
      }
    }
    std::optional<Atom> found;
    for (std::uint32_t f = 0; f < factors_.size(); ++f) {
      if (auto l = factors_[f]->parse_letter(text)) {
        if (found) return std::nullopt;
        found = Atom{f, *l};
      }
    }
    return found;
  }

  std::string format(const Simple& x) const {
    std::string out = "[";
    for (std::size_t i = 0; i < x.length(); ++i) {
      if (i) out += ' ';
      out += atom_name(x[i]);
    }
    return out + "]";
  }

  /// "1 + [a a*] + 2 [a a* a a*]"; the zero element prints as "0".
  std::string format(const Combination<Simple>& a) const {
    if (a.empty()) return "0";
    std::string out;
    for (const auto& [x, c] : a) {
      if (!out.empty()) out += " + ";
      if (x.empty()) {
        out += c.str();
      } else {
        if (c != 1) out += c.str() + " ";
        out += format(x);
      }
    }
    return out;
  }

 private:
  explicit Ring(std::vector<std::shared_ptr<const AtomicRing>> factors) : factors_(std::move(factors)) {}

  static Simple join(const Simple& prefix, const Word& middle, std::uint32_t factor, const Simple& suffix) {
    std::vector<Atom> atoms;
    atoms.reserve(prefix.length() + middle.size() + suffix.length());
    atoms.insert(atoms.end(), prefix.atoms().begin(), prefix.atoms().end());
    for (Letter l : middle) atoms.push_back(Atom{factor, l});
    atoms.insert(atoms.end(), suffix.atoms().begin(), suffix.atoms().end());
    return Simple(std::move(atoms));
  }

  // Each recursion removes a syllable from both sides; `budget` bounds the
  // remaining depth.
  Combination<Simple> product_unchecked(const Simple& x, const Simple& y, std::size_t budget) const {
    if (x.empty()) return Combination<Simple>(y);
    if (y.empty()) return Combination<Simple>(x);
    if (budget == 0) throw Error(ErrorCode::defect, "free-product recursion failed to terminate");

    const std::uint32_t fx = x.back().factor;
    const std::uint32_t fy = y.front().factor;
    if (fx != fy) {
      std::vector<Atom> atoms = x.atoms();
      atoms.insert(atoms.end(), y.atoms().begin(), y.atoms().end());
      return Combination<Simple>(Simple(std::move(atoms)));
    }

    const AtomicRing& ring = *factors_[fx];
    std::size_t split_x = x.length() - 1;
    std::size_t split_y = 1;
    if (ring.multi_letter()) {
      while (split_x > 0 && x[split_x - 1].factor == fx) --split_x;
      while (split_y < y.length() && y[split_y].factor == fy) ++split_y;
    }
    const Simple prefix = x.slice(0, split_x);
    const Simple suffix = y.slice(split_y, y.length());
    const Word last = x.slice(split_x, x.length()).word();
    const Word first = y.slice(0, split_y).word();

    Combination<Simple> out;
    for (const auto& [v, n] : ring.product(last, first)) {
      if (v.empty()) {
        out.add(product_unchecked(prefix, suffix, budget - 1), n);
      } else {
        out.add(join(prefix, v, fx, suffix), n);
      }
    }
    return out;
  }

  std::vector<std::shared_ptr<const AtomicRing>> factors_;
};

// ---------------------------------------------------------------------------
// Built-in rings

namespace catalog {

inline Ring au_ring() { return Ring::free(au(), "au"); }
inline Ring bu_ring() { return Ring::free(bu(), "bu"); }
inline Ring aaut_ring() { return Ring::free(aaut(), "aaut"); }
inline Ring reflection_ring(std::optional<std::uint64_t> s) {
  return Ring::free(reflection(s), "refl:" + (s ? std::to_string(*s) : std::string("inf")));
}

}  // namespace catalog

// ---------------------------------------------------------------------------
// Two constructions of a free product of free data

/// First simple pair on which the two constructions disagree.
struct FreeProductMismatch {
  Simple x, y;
  Combination<Word> from_union;
  Combination<Word> from_free_product;
};

struct FreeProductConsistency {
  std::size_t max_len = 0;
  std::size_t pairs_checked = 0;
  std::optional<FreeProductMismatch> mismatch;

  bool ok() const noexcept { return !mismatch.has_value(); }
};

/// Compares (A) the semiring free on the disjoint union of the data with
/// (B) the free-product backend over the individual free-datum rings, on all
/// simple pairs of length <= max_len. B's strings translate to A's words by
/// concatenating syllables.
inline FreeProductConsistency free_product_consistency(const std::vector<FusionDatum>& data, std::size_t max_len,
                                                       std::optional<LetterBound> bound = std::nullopt) {
  const FusionDatum united = FusionDatum::disjoint_union(data);
  std::vector<Ring> factors;
  for (std::size_t i = 0; i < data.size(); ++i) factors.push_back(Ring::free(data[i], "d" + std::to_string(i + 1)));
  const Ring product_ring = Ring::free_product(factors);

  auto translate = [&](const Simple& s) {
    std::vector<Letter> letters;
    letters.reserve(s.length());
    for (const auto& a : s.atoms()) letters.push_back(united.join(a.factor, a.letter));
    return Word(std::move(letters));
  };

  FreeProductConsistency report;
  report.max_len = max_len;
  const auto simples = product_ring.enumerate_simples(max_len, bound);
  for (const auto& x : simples) {
    const Word wx = translate(x);
    for (const auto& y : simples) {
      auto lhs = multiply(united, wx, translate(y));
      auto rhs = product_ring.product(x, y).map_keys(translate);
      ++report.pairs_checked;
      if (lhs != rhs) {
        report.mismatch = FreeProductMismatch{x, y, std::move(lhs), std::move(rhs)};
        return report;
      }
    }
  }
  return report;
}

}  // namespace fusionkit
