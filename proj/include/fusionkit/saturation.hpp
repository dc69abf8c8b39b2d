#pragma once

// Fixed-point closure of a set of simples under product constituents,
// optionally also under duals and conjugation y x y*, truncated at a length
// bound. Work proceeds in rounds: the members discovered in round r are
// combined with everything known in round r + 1, so results and round
// counts do not depend on how the work inside a round is scheduled.

#include <algorithm>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <thread>
#include <vector>

#include "fusionkit/ring.hpp"

namespace fusionkit {

struct SaturationOptions {
  std::size_t max_len = 0;
  bool close_under_dual = true;
  bool close_under_conjugation = false;
  /// Conjugating simples y (used when close_under_conjugation); only those
  /// with 2|y| + |x| <= max_len act on a member x.
  std::vector<Simple> conjugators;
  /// Spread the products of one round over hardware threads.
  bool parallel = false;
  /// Stop after the first round at which this returns true.
  std::function<bool(const std::set<Simple>&)> stop_when;
};

struct SaturationResult {
  std::set<Simple> members;
  std::size_t rounds = 0;
  /// Some constituent longer than max_len was discarded.
  bool hit_bound = false;
  bool stopped_early = false;
};

namespace detail {

/// Constituents of lhs * rhs of length <= max_len. Every constituent of x y
/// has length >= ||x| - |y|| - 1, which lets hopeless terms be skipped.
inline void collect_constituents(const Ring& ring, const Combination<Simple>& lhs, const Simple& rhs,
                                 std::size_t max_len, std::set<Simple>& out, bool& hit_bound) {
  for (const auto& [x, c] : lhs) {
    const std::size_t a = x.length(), b = rhs.length();
    const std::size_t lower = (a > b ? a - b : b - a);
    if (lower > max_len + 1) {
      hit_bound = true;
      continue;
    }
    for (const auto& [z, n] : ring.product(x, rhs)) {
      if (z.length() > max_len) hit_bound = true;
      else out.insert(z);
    }
  }
}

}  // namespace detail

inline SaturationResult saturate(const Ring& ring, const std::vector<Simple>& generators,
                                 const SaturationOptions& options) {
  SaturationResult result;
  result.members.insert(ring.unit());
  for (const auto& g : generators) {
    ring.require_simple(g);
    if (g.length() > options.max_len)
      throw Error(ErrorCode::beyond_bound, "generator " + ring.format(g) + " exceeds the bound");
    result.members.insert(g);
  }

  std::vector<Simple> frontier(result.members.begin(), result.members.end());
  while (!frontier.empty()) {
    if (options.stop_when && options.stop_when(result.members)) {
      result.stopped_early = true;
      break;
    }
    const std::vector<Simple> known(result.members.begin(), result.members.end());

    // One task per frontier member; each produces a local set.
    auto run = [&](const Simple& x, std::set<Simple>& found, bool& hit) {
      const Combination<Simple> cx(x);
      for (const auto& y : known) {
        detail::collect_constituents(ring, cx, y, options.max_len, found, hit);
        detail::collect_constituents(ring, Combination<Simple>(y), x, options.max_len, found, hit);
      }
      if (options.close_under_dual) found.insert(ring.dual(x));
      // y 1 y* is a scalar under the adjoint action.
      if (options.close_under_conjugation && !x.empty()) {
        for (const auto& y : options.conjugators) {
          if (2 * y.length() + x.length() > options.max_len) continue;
          const auto yx = ring.product(y, x);
          detail::collect_constituents(ring, yx, ring.dual(y), options.max_len, found, hit);
        }
      }
    };

    std::set<Simple> discovered;
    bool hit = false;
    const unsigned workers = options.parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
    if (workers <= 1 || frontier.size() < 2) {
      for (const auto& x : frontier) run(x, discovered, hit);
    } else {
      std::mutex merge;
      std::vector<std::thread> pool;
      std::size_t next = 0;
      std::mutex take;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          std::set<Simple> local;
          bool local_hit = false;
          for (;;) {
            std::size_t i;
            {
              std::lock_guard lock(take);
              if (next >= frontier.size()) break;
              i = next++;
            }
            run(frontier[i], local, local_hit);
          }
          std::lock_guard lock(merge);
          discovered.insert(local.begin(), local.end());
          hit |= local_hit;
        });
      }
      for (auto& t : pool) t.join();
    }
    result.hit_bound |= hit;

    frontier.clear();
    for (const auto& z : discovered)
      if (result.members.insert(z).second) frontier.push_back(z);
    if (!frontier.empty()) ++result.rounds;
  }
  return result;
}

}  // namespace fusionkit
