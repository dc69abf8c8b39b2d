#pragma once

// The cocenter at fusion level: the simples of trivial degree in the
// universal grading, equivalently those majorized by some product
// (z_1..z_n)(z_1..z_n)*, equivalently the sub-semiring generated by the
// constituents of the products z z*. All sets are truncated at a length
// bound and every result records its bounds.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fusionkit/grading.hpp"
#include "fusionkit/ring.hpp"
#include "fusionkit/saturation.hpp"

namespace fusionkit {

struct CocenterSlice {
  Ring ring;
  std::size_t max_len = 0;
  std::vector<Simple> simples;

  bool contains(const Simple& x) const { return std::binary_search(simples.begin(), simples.end(), x); }
};

/// Simples of length <= max_len with identity degree in `chain`.
inline CocenterSlice cocenter_simples(const Ring& ring, const ChainGroup& chain, std::size_t max_len,
                                      std::optional<LetterBound> bound = std::nullopt) {
  CocenterSlice slice{ring, max_len, {}};
  for (const auto& x : ring.enumerate_simples(max_len, bound))
    if (chain.has_identity_degree(x)) slice.simples.push_back(x);
  return slice;
}

inline CocenterSlice cocenter_simples(const Ring& ring, std::size_t max_len,
                                      std::optional<LetterBound> bound = std::nullopt) {
  return cocenter_simples(ring, chain_group_of(ring), max_len, bound);
}

/// Simples x of length <= max_len with x <= (z_1..z_n)(z_1..z_n)* for some
/// n <= max_factors and simples z_j of length <= max_len.
inline std::set<Simple> cocenter_char_a(const Ring& ring, std::size_t max_len, std::size_t max_factors,
                                        std::optional<LetterBound> bound = std::nullopt) {
  std::set<Simple> found{ring.unit()};
  if (max_factors == 0) return found;
  const auto simples = ring.enumerate_simples(max_len, bound);

  // (z_1..z_n)(z_1..z_n)* = z_1 (z_2 ( ... z_n z_n* ... ) z_2*) z_1*, built
  // from the inside out. Layer k holds the inner products with k factors.
  std::vector<Combination<Simple>> layer;
  for (const auto& z : simples) layer.push_back(ring.product(z, ring.dual(z)));
  auto harvest = [&](const Combination<Simple>& c) {
    for (const auto& [x, n] : c)
      if (x.length() <= max_len) found.insert(x);
  };
  for (const auto& c : layer) harvest(c);

  for (std::size_t n = 2; n <= max_factors; ++n) {
    std::vector<Combination<Simple>> next;
    const bool last = n == max_factors;
    for (const auto& inner : layer) {
      for (const auto& z : simples) {
        const Simple zd = ring.dual(z);
        if (last) {
          // Only constituents within the bound matter on the final layer.
          std::set<Simple> out;
          bool hit = false;
          const auto left = ring.product(Combination<Simple>(z), inner);
          detail::collect_constituents(ring, left, zd, max_len, out, hit);
          found.insert(out.begin(), out.end());
        } else {
          auto c = ring.product(ring.product(Combination<Simple>(z), inner), Combination<Simple>(zd));
          harvest(c);
          next.push_back(std::move(c));
        }
      }
    }
    layer = std::move(next);
  }
  return found;
}

/// Sub-semiring generated, within length <= max_len, by the constituents of
/// z z* over simples z of length <= max_len.
inline std::set<Simple> cocenter_char_b(const Ring& ring, std::size_t max_len,
                                        std::optional<LetterBound> bound = std::nullopt) {
  std::set<Simple> generators;
  for (const auto& z : ring.enumerate_simples(max_len, bound))
    for (const auto& [x, n] : ring.product(z, ring.dual(z)))
      if (x.length() <= max_len) generators.insert(x);
  SaturationOptions options;
  options.max_len = max_len;
  options.close_under_dual = false;
  return saturate(ring, std::vector<Simple>(generators.begin(), generators.end()), options).members;
}

struct AltDescrEntry {
  Simple simple;
  bool by_degree = false;
  bool by_char_a = false;
  bool by_char_b = false;
};

/// Comparison of the three descriptions of the cocenter within a bound.
struct AltDescrReport {
  std::size_t max_len = 0;
  std::size_t max_factors = 0;
  bool exact_degrees = true;
  std::vector<AltDescrEntry> entries;
  /// Found by (a) or (b) but of nontrivial degree: contradicts the theory.
  std::vector<Simple> refutations;
  /// Found by (b) but not by (a) within the same bounds.
  std::vector<Simple> b_not_a;
  /// Of trivial degree but missed by (a) or (b) only where (a) still
  /// contains (b): attributable to the bounds.
  std::vector<Simple> bound_sensitive;

  bool ok() const noexcept { return refutations.empty() && b_not_a.empty() && bound_sensitive.empty(); }
};

inline AltDescrReport crosscheck_alt_descr(const Ring& ring, const ChainGroup& chain, std::size_t max_len,
                                           std::size_t max_factors, std::optional<LetterBound> bound = std::nullopt) {
  AltDescrReport report;
  report.max_len = max_len;
  report.max_factors = max_factors;
  report.exact_degrees = chain.kind() == ChainGroup::Kind::exact;
  const auto slice = cocenter_simples(ring, chain, max_len, bound);
  const std::set<Simple> kernel(slice.simples.begin(), slice.simples.end());
  const auto a = cocenter_char_a(ring, max_len, max_factors, bound);
  const auto b = cocenter_char_b(ring, max_len, bound);

  // Constituents with letters outside the letter bound are not compared.
  const auto universe = ring.enumerate_simples(max_len, bound);
  for (const auto& x : universe) {
    if (!kernel.count(x) && !a.count(x) && !b.count(x)) continue;
    AltDescrEntry e{x, kernel.count(x) != 0, a.count(x) != 0, b.count(x) != 0};
    if (!e.by_degree && (e.by_char_a || e.by_char_b)) report.refutations.push_back(x);
    else if (e.by_char_b && !e.by_char_a) report.b_not_a.push_back(x);
    else if (!e.by_char_a || !e.by_char_b) report.bound_sensitive.push_back(x);
    report.entries.push_back(std::move(e));
  }
  return report;
}

inline AltDescrReport crosscheck_alt_descr(const Ring& ring, std::size_t max_len, std::size_t max_factors,
                                           std::optional<LetterBound> bound = std::nullopt) {
  return crosscheck_alt_descr(ring, chain_group_of(ring), max_len, max_factors, bound);
}

}  // namespace fusionkit
