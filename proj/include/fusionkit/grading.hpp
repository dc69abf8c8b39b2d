#pragma once

// Universal grading (chain) groups.
//
// Exact chain groups are free products of components, each a cyclic group
// (finite or Z) or a finite group given by a table. Elements are kept in
// alternating normal form. Rings outside the recognized classes get a
// bounded union-find oracle instead.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fusionkit/datum.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/finite_group.hpp"
#include "fusionkit/ring.hpp"

namespace fusionkit {

/// Z/order, or Z when order is empty.
struct CyclicComponent {
  std::optional<std::uint64_t> order;

  friend bool operator==(const CyclicComponent&, const CyclicComponent&) = default;
};

using GroupComponent = std::variant<CyclicComponent, FiniteGroup>;

/// Alternating normal form: consecutive components distinct, every value
/// nontrivial in its component. The identity is the empty sequence.
struct GroupElement {
  struct Piece {
    std::uint32_t component = 0;
    std::int64_t value = 0;
    friend constexpr auto operator<=>(const Piece&, const Piece&) = default;
  };
  std::vector<Piece> pieces;

  bool is_identity() const noexcept { return pieces.empty(); }
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Free product of cyclic and finite components.
class FreeProductGroup {
 public:
  FreeProductGroup() = default;
  explicit FreeProductGroup(std::vector<GroupComponent> components) : components_(std::move(components)) {}

  const std::vector<GroupComponent>& components() const noexcept { return components_; }
  bool trivial() const noexcept { return components_.empty(); }

  GroupElement identity() const { return {}; }

  /// The element `value` of one component (normalized; identity if trivial).
  GroupElement embed(std::uint32_t component, std::int64_t value) const {
    GroupElement g;
    const auto v = normalize(component, value);
    if (!is_trivial_value(component, v)) g.pieces.push_back({component, v});
    return g;
  }

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const {
    GroupElement out = a;
    for (const auto& p : b.pieces) {
      if (!out.pieces.empty() && out.pieces.back().component == p.component) {
        const auto v = combine(p.component, out.pieces.back().value, p.value);
        if (is_trivial_value(p.component, v)) {
          out.pieces.pop_back();
        } else {
          out.pieces.back().value = v;
        }
      } else {
        out.pieces.push_back(p);
      }
    }
    return out;
  }

  GroupElement inverse(const GroupElement& a) const {
    GroupElement out;
    for (auto it = a.pieces.rbegin(); it != a.pieces.rend(); ++it)
      out.pieces.push_back({it->component, invert(it->component, it->value)});
    return out;
  }

  /// "Z * Z/3"; the trivial group is "1".
  std::string describe() const {
    if (components_.empty()) return "1";
    std::string out;
    for (std::uint32_t c = 0; c < components_.size(); ++c) {
      if (c) out += " * ";
      out += describe_component(c);
    }
    return out;
  }

  std::string describe_component(std::uint32_t c) const {
    return std::visit(
        [](const auto& comp) -> std::string {
          using T = std::decay_t<decltype(comp)>;
          if constexpr (std::is_same_v<T, CyclicComponent>)
            return comp.order ? "Z/" + std::to_string(*comp.order) : "Z";
          else
            return "G" + std::to_string(comp.order());
        },
        components_.at(c));
  }

  /// "g1^2 g2^1", finite components by element name; identity is "e".
  std::string format(const GroupElement& g) const {
    if (g.is_identity()) return "e";
    std::string out;
    for (const auto& p : g.pieces) {
      if (!out.empty()) out += ' ';
      if (auto fg = std::get_if<FiniteGroup>(&components_[p.component]))
        out += "g" + std::to_string(p.component + 1) + "[" + fg->name(static_cast<std::size_t>(p.value)) + "]";
      else
        out += "g" + std::to_string(p.component + 1) + "^" + std::to_string(p.value);
    }
    return out;
  }

 private:
  std::int64_t normalize(std::uint32_t c, std::int64_t v) const {
    if (auto cyc = std::get_if<CyclicComponent>(&components_.at(c))) {
      if (!cyc->order) return v;
      const auto s = static_cast<std::int64_t>(*cyc->order);
      auto r = v % s;
      return r < 0 ? r + s : r;
    }
    return v;
  }

  bool is_trivial_value(std::uint32_t c, std::int64_t v) const {
    if (auto fg = std::get_if<FiniteGroup>(&components_.at(c))) return static_cast<std::size_t>(v) == fg->identity();
    return v == 0;
  }

  std::int64_t combine(std::uint32_t c, std::int64_t a, std::int64_t b) const {
    if (auto fg = std::get_if<FiniteGroup>(&components_.at(c)))
      return static_cast<std::int64_t>(fg->multiply(static_cast<std::size_t>(a), static_cast<std::size_t>(b)));
    return normalize(c, a + b);
  }

  std::int64_t invert(std::uint32_t c, std::int64_t a) const {
    if (auto fg = std::get_if<FiniteGroup>(&components_.at(c)))
      return static_cast<std::int64_t>(fg->inverse(static_cast<std::size_t>(a)));
    return normalize(c, -a);
  }

  std::vector<GroupComponent> components_;
};

// ---------------------------------------------------------------------------
// Bounded oracle

/// Equivalence classes of simples of length <= max_len, generated by
/// "all constituents of x y are equivalent" and closed under compatibility
/// with multiplication. Every merge is sound, so the partition refines the
/// true fibers of the universal grading; it is exact once the bound is
/// large enough (and always for rings with finitely many simples).
class BoundedOracle {
 public:
  std::size_t max_len() const noexcept { return max_len_; }
  /// Whether every simple of the ring was enumerated.
  bool complete() const noexcept { return complete_; }
  const std::vector<Simple>& simples() const noexcept { return simples_; }
  std::size_t class_count() const noexcept { return class_count_; }

  std::optional<std::size_t> class_of(const Simple& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    return class_of_[it->second];
  }

  std::size_t unit_class() const { return class_of_[0]; }

  /// Class of the constituents of x y for representatives x, y, when some
  /// constituent stays within the bound.
  std::optional<std::size_t> multiply_classes(std::size_t a, std::size_t b) const {
    return product_class_.at(representative_.at(a)).at(representative_.at(b));
  }

  std::vector<std::vector<Simple>> classes() const {
    std::vector<std::vector<Simple>> out(class_count_);
    for (std::size_t i = 0; i < simples_.size(); ++i) out[class_of_[i]].push_back(simples_[i]);
    return out;
  }

  friend BoundedOracle bounded_chain_oracle(const Ring& ring, std::size_t max_len, std::optional<LetterBound> bound);

 private:
  std::size_t max_len_ = 0;
  bool complete_ = false;
  std::vector<Simple> simples_;
  std::map<Simple, std::size_t> index_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> representative_;
  std::size_t class_count_ = 0;
  std::vector<std::vector<std::optional<std::size_t>>> product_class_;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }

  /// Smaller index becomes the root; returns true when a merge happened.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

inline bool has_finitely_many_simples(const Ring& ring) {
  if (ring.factor_count() != 1) return false;
  return !ring.factor(0).multi_letter();
}

}  // namespace detail

inline BoundedOracle bounded_chain_oracle(const Ring& ring, std::size_t max_len,
                                          std::optional<LetterBound> bound = std::nullopt) {
  BoundedOracle oracle;
  oracle.max_len_ = max_len;
  oracle.simples_ = ring.enumerate_simples(max_len, bound);
  oracle.complete_ = detail::has_finitely_many_simples(ring) && max_len >= 1;
  const std::size_t n = oracle.simples_.size();
  for (std::size_t i = 0; i < n; ++i) oracle.index_.emplace(oracle.simples_[i], i);

  detail::UnionFind uf(n);
  // First in-bound constituent of each product, for the congruence pass.
  std::vector<std::vector<std::optional<std::size_t>>> first(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::optional<std::size_t> anchor;
      for (const auto& [z, c] : ring.product(oracle.simples_[i], oracle.simples_[j])) {
        auto it = oracle.index_.find(z);
        if (it == oracle.index_.end()) continue;
        if (anchor) uf.unite(*anchor, it->second);
        else anchor = it->second;
      }
      first[i][j] = anchor;
    }
  }

  // x ~ x' forces (constituents of x y) ~ (constituents of x' y), both sides.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t y = 0; y < n; ++y) {
      std::map<std::size_t, std::size_t> right_seen, left_seen;
      for (std::size_t x = 0; x < n; ++x) {
        const std::size_t root = uf.find(x);
        if (auto z = first[x][y]) {
          auto [it, inserted] = right_seen.try_emplace(root, *z);
          if (!inserted) changed |= uf.unite(it->second, *z);
        }
        if (auto z = first[y][x]) {
          auto [it, inserted] = left_seen.try_emplace(root, *z);
          if (!inserted) changed |= uf.unite(it->second, *z);
        }
      }
    }
  }

  std::map<std::size_t, std::size_t> class_id;
  oracle.class_of_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = class_id.try_emplace(uf.find(i), class_id.size());
    if (inserted) oracle.representative_.push_back(i);
    oracle.class_of_[i] = it->second;
  }
  oracle.class_count_ = class_id.size();
  oracle.product_class_.assign(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (first[i][j]) oracle.product_class_[i][j] = oracle.class_of_[*first[i][j]];
  return oracle;
}

// ---------------------------------------------------------------------------
// Exact chain groups

/// Degrees of the letters of one ring factor in the global chain group.
struct LetterDegrees {
  std::map<std::int64_t, GroupElement> table;
  /// For cyclic data: the component receiving letter x as x mod s.
  std::optional<std::uint32_t> cyclic_component;
};

struct OracleClass {
  std::size_t id = 0;
  friend auto operator<=>(const OracleClass&, const OracleClass&) = default;
};

using ChainGroupElement = std::variant<GroupElement, OracleClass>;

class ChainGroup {
 public:
  enum class Kind { exact, bounded_oracle };

  static ChainGroup exact(FreeProductGroup group, std::vector<LetterDegrees> degrees) {
    ChainGroup g;
    g.kind_ = Kind::exact;
    g.group_ = std::move(group);
    g.degrees_ = std::move(degrees);
    return g;
  }

  static ChainGroup from_oracle(BoundedOracle oracle) {
    ChainGroup g;
    g.kind_ = Kind::bounded_oracle;
    g.oracle_ = std::move(oracle);
    return g;
  }

  Kind kind() const noexcept { return kind_; }
  const FreeProductGroup& group() const {
    if (kind_ != Kind::exact) throw Error(ErrorCode::defect, "group() on a bounded oracle");
    return group_;
  }
  const BoundedOracle& oracle() const {
    if (kind_ != Kind::bounded_oracle) throw Error(ErrorCode::defect, "oracle() on an exact chain group");
    return *oracle_;
  }

  /// Degree of one letter of one factor.
  GroupElement letter_degree(const Atom& a) const {
    const auto& d = degrees_.at(a.factor);
    if (d.cyclic_component) return group_.embed(*d.cyclic_component, a.letter.id);
    auto it = d.table.find(a.letter.id);
    if (it == d.table.end()) throw Error(ErrorCode::not_a_simple, "letter has no degree");
    return it->second;
  }

  /// Product of the letter degrees; for the oracle, the class id.
  ChainGroupElement degree(const Simple& x) const {
    if (kind_ == Kind::bounded_oracle) {
      auto c = oracle_->class_of(x);
      if (!c) throw Error(ErrorCode::beyond_bound, "simple exceeds the oracle bound " + std::to_string(oracle_->max_len()));
      return OracleClass{*c};
    }
    GroupElement g;
    for (const auto& a : x.atoms()) g = group_.multiply(g, letter_degree(a));
    return g;
  }

  bool is_identity(const ChainGroupElement& g) const {
    if (auto e = std::get_if<GroupElement>(&g)) return e->is_identity();
    return std::get<OracleClass>(g).id == oracle_->unit_class();
  }

  bool has_identity_degree(const Simple& x) const { return is_identity(degree(x)); }

  ChainGroupElement multiply(const ChainGroupElement& a, const ChainGroupElement& b) const {
    if (kind_ == Kind::exact) return group_.multiply(std::get<GroupElement>(a), std::get<GroupElement>(b));
    auto c = oracle_->multiply_classes(std::get<OracleClass>(a).id, std::get<OracleClass>(b).id);
    if (!c) throw Error(ErrorCode::beyond_bound, "class product leaves the oracle bound");
    return OracleClass{*c};
  }

  std::string describe() const {
    if (kind_ == Kind::exact) return group_.describe();
    return "bounded oracle (max_len " + std::to_string(oracle_->max_len()) + ", " +
           std::to_string(oracle_->class_count()) + " classes" + (oracle_->complete() ? ", complete" : "") + ")";
  }

  std::string format(const ChainGroupElement& g) const {
    if (auto e = std::get_if<GroupElement>(&g)) return group_.format(*e);
    return "class " + std::to_string(std::get<OracleClass>(g).id);
  }

 private:
  Kind kind_ = Kind::exact;
  FreeProductGroup group_;
  std::vector<LetterDegrees> degrees_;
  std::optional<BoundedOracle> oracle_;
};

namespace detail {

/// Components and letter degrees contributed by one ring factor, with
/// component indices local to the factor.
struct FactorGrading {
  std::vector<GroupComponent> components;
  LetterDegrees degrees;
};

/// Adds a finite group component; cyclic groups become Z/n. `element_of`
/// lists, per letter id, the group element it maps to.
inline void add_finite_component(FactorGrading& out, const FiniteGroup& group,
                                 const std::vector<std::pair<std::int64_t, std::size_t>>& element_of) {
  if (group.order() == 1) {
    for (auto [letter, e] : element_of) out.degrees.table[letter] = GroupElement{};
    return;
  }
  const auto c = static_cast<std::uint32_t>(out.components.size());
  FreeProductGroup local;
  if (auto gen = group.cyclic_generator()) {
    std::vector<std::int64_t> log(group.order(), 0);
    std::size_t x = group.identity();
    for (std::size_t k = 0; k < group.order(); ++k, x = group.multiply(x, *gen)) log[x] = static_cast<std::int64_t>(k);
    out.components.push_back(CyclicComponent{group.order()});
    for (auto [letter, e] : element_of) {
      GroupElement g;
      if (log[e] != 0) g.pieces.push_back({c, log[e]});
      out.degrees.table[letter] = g;
    }
  } else {
    out.components.push_back(group);
    for (auto [letter, e] : element_of) {
      GroupElement g;
      if (e != group.identity()) g.pieces.push_back({c, static_cast<std::int64_t>(e)});
      out.degrees.table[letter] = g;
    }
  }
}

/// Chain group of the semiring free on a finite datum: generated by the
/// letters with r* = r^-1 and r s = r o s. Fusion-free letter pairs {r, r*}
/// give Z (or Z/2 when r = r*); a fusion-connected block on which o is total
/// and forms a group with * as inverse gives that group. Anything else is
/// refused.
inline void grade_finite_datum(const FusionDatum& datum, const std::vector<Letter>& letters,
                               const std::function<std::int64_t(Letter)>& encode, FactorGrading& out) {
  std::map<Letter, std::size_t> pos;
  for (std::size_t i = 0; i < letters.size(); ++i) pos[letters[i]] = i;
  UnionFind uf(letters.size());
  for (Letter r : letters) {
    uf.unite(pos[r], pos[datum.star(r)]);
    for (Letter s : letters) {
      if (auto t = datum.fuse(r, s)) {
        uf.unite(pos[r], pos[s]);
        uf.unite(pos[r], pos[*t]);
      }
    }
  }
  std::map<std::size_t, std::vector<Letter>> blocks;
  for (Letter r : letters) blocks[uf.find(pos[r])].push_back(r);

  for (const auto& [root, block] : blocks) {
    bool has_fusion = false;
    for (Letter r : block)
      for (Letter s : block) has_fusion |= datum.fuse(r, s).has_value();

    if (!has_fusion) {
      const auto c = static_cast<std::uint32_t>(out.components.size());
      if (block.size() == 1) {
        out.components.push_back(CyclicComponent{2});
        out.degrees.table[encode(block[0])] = GroupElement{{{c, 1}}};
      } else {
        out.components.push_back(CyclicComponent{std::nullopt});
        out.degrees.table[encode(block[0])] = GroupElement{{{c, 1}}};
        out.degrees.table[encode(block[1])] = GroupElement{{{c, -1}}};
      }
      continue;
    }

    std::map<Letter, std::size_t> local;
    for (std::size_t i = 0; i < block.size(); ++i) local[block[i]] = i;
    std::vector<std::vector<std::size_t>> table(block.size(), std::vector<std::size_t>(block.size()));
    for (Letter r : block) {
      for (Letter s : block) {
        auto t = datum.fuse(r, s);
        if (!t)
          throw Error(ErrorCode::presentation_not_recognized,
                      "fusion is partial on the block containing " + datum.name(r) + "; use the bounded oracle");
        table[local[r]][local[s]] = local[*t];
      }
    }
    std::vector<std::string> names;
    for (Letter r : block) names.push_back(datum.name(r));
    std::optional<FiniteGroup> group;
    try {
      group.emplace(table, names);
    } catch (const Error&) {
      throw Error(ErrorCode::presentation_not_recognized,
                  "fusion on the block containing " + datum.name(block[0]) + " is not a group; use the bounded oracle");
    }
    for (Letter r : block)
      if (group->inverse(local[r]) != local[datum.star(r)])
        throw Error(ErrorCode::presentation_not_recognized,
                    "involution is not inversion on the block containing " + datum.name(r));
    std::vector<std::pair<std::int64_t, std::size_t>> element_of;
    for (Letter r : block) element_of.emplace_back(encode(r), local[r]);
    add_finite_component(out, *group, element_of);
  }
}

/// `top_level` data may use the cyclic rule (letter x has degree x mod s);
/// parts of a union list their letters explicitly.
inline void grade_datum(const FusionDatum& datum, const std::function<std::int64_t(Letter)>& encode,
                        FactorGrading& out, bool top_level) {
  switch (datum.kind()) {
    case FusionDatum::Kind::cyclic: {
      auto s = datum.modulus();
      if (s && *s == 1) {
        out.degrees.table[encode(Letter{0})] = GroupElement{};
        return;
      }
      if (top_level) {
        out.degrees.cyclic_component = 0;
        out.components.push_back(CyclicComponent{s});
        return;
      }
      if (!s)
        throw Error(ErrorCode::presentation_not_recognized, "infinite cyclic part inside a union is not supported");
      const auto c = static_cast<std::uint32_t>(out.components.size());
      out.components.push_back(CyclicComponent{s});
      for (Letter l : datum.letters()) {
        GroupElement g;
        if (l.id != 0) g.pieces.push_back({c, l.id});
        out.degrees.table[encode(l)] = g;
      }
      return;
    }
    case FusionDatum::Kind::table:
      grade_finite_datum(datum, datum.letters(), encode, out);
      return;
    case FusionDatum::Kind::disjoint_union: {
      const auto& parts = datum.parts();
      for (std::size_t p = 0; p < parts.size(); ++p) {
        if (!parts[p].finite())
          throw Error(ErrorCode::presentation_not_recognized, "infinite part inside a union is not supported");
        grade_datum(parts[p], [&](Letter l) { return encode(datum.join(p, l)); }, out, false);
      }
      return;
    }
  }
}

inline FactorGrading grade_factor(const AtomicRing& factor) {
  FactorGrading out;
  switch (factor.backend()) {
    case AtomicRing::Backend::free_datum:
      grade_datum(static_cast<const FreeDatumRing&>(factor).datum(), [](Letter l) { return l.id; }, out, true);
      break;
    case AtomicRing::Backend::finite_group: {
      const auto& group = static_cast<const GroupRing&>(factor).group();
      std::vector<std::pair<std::int64_t, std::size_t>> element_of;
      for (std::size_t g = 0; g < group.order(); ++g)
        if (g != group.identity()) element_of.emplace_back(static_cast<std::int64_t>(g), g);
      add_finite_component(out, group, element_of);
      break;
    }
    case AtomicRing::Backend::finite_table: {
      // Finitely many simples: the exhaustive oracle is exact.
      const auto& table = static_cast<const TableRing&>(factor).table();
      const Ring alone = Ring::table(table, factor.label());
      const auto oracle = bounded_chain_oracle(alone, 1);
      const std::size_t k = oracle.class_count();
      std::vector<std::vector<std::size_t>> mult(k, std::vector<std::size_t>(k));
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) mult[a][b] = *oracle.multiply_classes(a, b);
      std::vector<std::string> names;
      for (std::size_t a = 0; a < k; ++a) names.push_back("c" + std::to_string(a));
      const FiniteGroup group(std::move(mult), std::move(names));
      std::vector<std::pair<std::int64_t, std::size_t>> element_of;
      for (std::size_t x = 1; x < table.size(); ++x)
        element_of.emplace_back(static_cast<std::int64_t>(x), *oracle.class_of(Simple::from_word(Word{static_cast<std::int64_t>(x)})));
      add_finite_component(out, group, element_of);
      break;
    }
  }
  return out;
}

}  // namespace detail

/// Exact chain group of a ring built from recognized pieces: the free
/// product of the factors' chain groups. Throws presentation_not_recognized
/// for free data outside the recognized classes.
inline ChainGroup chain_group_of(const Ring& ring) {
  std::vector<GroupComponent> components;
  std::vector<LetterDegrees> degrees;
  for (std::size_t f = 0; f < ring.factor_count(); ++f) {
    auto local = detail::grade_factor(ring.factor(f));
    const auto offset = static_cast<std::uint32_t>(components.size());
    for (auto& c : local.components) components.push_back(std::move(c));
    for (auto& [letter, g] : local.degrees.table)
      for (auto& p : g.pieces) p.component += offset;
    if (local.degrees.cyclic_component) *local.degrees.cyclic_component += offset;
    degrees.push_back(std::move(local.degrees));
  }
  return ChainGroup::exact(FreeProductGroup(std::move(components)), std::move(degrees));
}

/// Exact chain group when recognized, otherwise the bounded oracle at oracle_len.
inline ChainGroup chain_group_or_oracle(const Ring& ring, std::size_t oracle_len,
                                        std::optional<LetterBound> bound = std::nullopt) {
  try {
    return chain_group_of(ring);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::presentation_not_recognized) throw;
    return ChainGroup::from_oracle(bounded_chain_oracle(ring, oracle_len, bound));
  }
}

/// Result of comparing the oracle partition with exact degrees.
struct PartitionComparison {
  std::size_t max_len = 0;
  /// Simples with equal exact degree but different oracle classes.
  std::optional<std::pair<Simple, Simple>> split_by_oracle;
  /// Simples sharing an oracle class but with different exact degrees.
  std::optional<std::pair<Simple, Simple>> merged_by_oracle;

  bool agree() const noexcept { return !split_by_oracle && !merged_by_oracle; }
  /// A split only means the bound was too small; a merge is a real error.
  bool bound_insufficient() const noexcept { return split_by_oracle && !merged_by_oracle; }
};

inline PartitionComparison compare_with_oracle(const ChainGroup& exact, const BoundedOracle& oracle) {
  PartitionComparison out;
  out.max_len = oracle.max_len();
  std::map<GroupElement, std::pair<std::size_t, Simple>> by_degree;
  std::map<std::size_t, std::pair<GroupElement, Simple>> by_class;
  for (const auto& x : oracle.simples()) {
    const auto deg = std::get<GroupElement>(exact.degree(x));
    const auto cls = *oracle.class_of(x);
    auto [d, new_degree] = by_degree.try_emplace(deg, cls, x);
    if (!new_degree && d->second.first != cls && !out.split_by_oracle) out.split_by_oracle = {d->second.second, x};
    auto [c, new_class] = by_class.try_emplace(cls, deg, x);
    if (!new_class && c->second.first != deg && !out.merged_by_oracle) out.merged_by_oracle = {c->second.second, x};
  }
  return out;
}

}  // namespace fusionkit
