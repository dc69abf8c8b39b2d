#pragma once

// Ad-invariant based sub-semirings at fusion level. A set of simples is
// ad-invariant when it contains every constituent of y x y* for each nonunit
// member x and each simple y of the ring; closures are truncated at a length
// bound.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fusionkit/cocenter.hpp"
#include "fusionkit/grading.hpp"
#include "fusionkit/saturation.hpp"

namespace fusionkit {

struct BasedSubring {
  Ring ring;
  std::size_t max_len = 0;
  std::set<Simple> simples;

  bool contains(const Simple& x) const { return simples.count(x) != 0; }
};

struct SaturationReport {
  std::set<Simple> generators;
  std::size_t rounds = 0;
  BasedSubring result;
  bool hit_bound = false;
};

/// Smallest set containing `gens` and the unit that is closed under duals
/// and product constituents, truncated at max_len.
inline BasedSubring based_closure(const Ring& ring, const std::set<Simple>& gens, std::size_t max_len) {
  SaturationOptions options;
  options.max_len = max_len;
  auto r = saturate(ring, std::vector<Simple>(gens.begin(), gens.end()), options);
  return BasedSubring{ring, max_len, std::move(r.members)};
}

struct AdClosureOptions {
  std::optional<LetterBound> letter_bound;
  bool parallel = false;
};

namespace detail {

inline SaturationOptions ad_options(const Ring& ring, std::size_t max_len, const AdClosureOptions& opts) {
  SaturationOptions options;
  options.max_len = max_len;
  options.close_under_conjugation = true;
  options.parallel = opts.parallel;
  // Conjugators act only when 2|y| + |x| <= max_len, so |y| <= max_len / 2.
  options.conjugators = ring.enumerate_simples(max_len / 2, opts.letter_bound);
  return options;
}

}  // namespace detail

inline SaturationReport ad_closure(const Ring& ring, const std::set<Simple>& gens, std::size_t max_len,
                                   const AdClosureOptions& opts = {}) {
  auto r = saturate(ring, std::vector<Simple>(gens.begin(), gens.end()), detail::ad_options(ring, max_len, opts));
  return SaturationReport{gens, r.rounds, BasedSubring{ring, max_len, std::move(r.members)}, r.hit_bound};
}

struct SimplicityVerdict {
  Simple generator;
  bool saturates = false;
  /// Smallest target cocenter simple absent from the closure when stuck.
  std::optional<Simple> witness;
  std::size_t closure_size = 0;
  std::size_t rounds = 0;
  bool hit_bound = false;
  /// Saturation stopped once every target was reached.
  bool stopped_early = false;
};

struct SimplicityReport {
  std::size_t inner_len = 0;
  std::size_t outer_len = 0;
  bool exact_degrees = true;
  std::vector<Simple> targets;
  std::vector<SimplicityVerdict> verdicts;

  bool all_saturate() const noexcept {
    for (const auto& v : verdicts)
      if (!v.saturates) return false;
    return true;
  }
};

/// For each nontrivial cocenter simple g with |g| <= inner_len, saturates
/// {g} under ad_closure at outer_len and checks that every cocenter simple
/// of length <= inner_len is reached.
inline SimplicityReport bounded_simplicity_check(const Ring& ring, const ChainGroup& chain, std::size_t inner_len,
                                                 std::size_t outer_len, const AdClosureOptions& opts = {}) {
  if (inner_len > outer_len)
    throw Error(ErrorCode::beyond_bound, "inner length exceeds outer length");
  SimplicityReport report;
  report.inner_len = inner_len;
  report.outer_len = outer_len;
  report.exact_degrees = chain.kind() == ChainGroup::Kind::exact;
  report.targets = cocenter_simples(ring, chain, inner_len, opts.letter_bound).simples;

  auto options = detail::ad_options(ring, outer_len, opts);
  const auto& targets = report.targets;
  options.stop_when = [&targets](const std::set<Simple>& members) {
    for (const auto& t : targets)
      if (!members.count(t)) return false;
    return true;
  };
  for (const auto& g : targets) {
    if (g.empty()) continue;
    auto r = saturate(ring, {g}, options);
    SimplicityVerdict v;
    v.generator = g;
    v.closure_size = r.members.size();
    v.rounds = r.rounds;
    v.hit_bound = r.hit_bound;
    v.stopped_early = r.stopped_early;
    v.saturates = true;
    for (const auto& t : targets) {
      if (!r.members.count(t)) {
        v.saturates = false;
        v.witness = t;
        break;
      }
    }
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

inline SimplicityReport bounded_simplicity_check(const Ring& ring, std::size_t inner_len, std::size_t outer_len,
                                                 const AdClosureOptions& opts = {}) {
  return bounded_simplicity_check(ring, chain_group_of(ring), inner_len, outer_len, opts);
}

/// A cocenter simple of length <= 2|u| + 4 starting with u and ending with
/// u*, if one exists.
inline std::optional<Simple> find_u_ustar_cocenter_simple(const Ring& ring, const ChainGroup& chain, const Simple& u,
                                                          std::optional<LetterBound> bound = std::nullopt) {
  ring.require_simple(u);
  const Simple ud = ring.dual(u);
  const std::size_t n = u.length();
  for (const auto& x : cocenter_simples(ring, chain, 2 * n + 4, bound).simples) {
    if (x.length() < 2 * n) continue;
    if (x.slice(0, n) == u && x.slice(x.length() - n, x.length()) == ud) return x;
  }
  return std::nullopt;
}

}  // namespace fusionkit
