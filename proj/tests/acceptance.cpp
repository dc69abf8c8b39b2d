// One PASS/FAIL line per criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "fusionkit/fusionkit.hpp"

using namespace fusionkit;

namespace {

using Clock = std::chrono::steady_clock;

// Runtime budgets in seconds.
constexpr double kBudgetAssociativity = 300;
constexpr double kBudgetSimplicity = 600;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Simple w(std::initializer_list<std::int64_t> ids) { return Simple::from_word(Word(ids)); }

Simple power(std::size_t m) { return Simple::from_word(Word(std::vector<Letter>(m, Letter{0}))); }

Combination<Simple> terms(std::initializer_list<Simple> xs) {
  Combination<Simple> c;
  for (const auto& x : xs) c.add(x, 1);
  return c;
}

Ring bubu() { return Ring::free_product({catalog::bu_ring(), catalog::bu_ring()}); }

std::vector<std::pair<std::string, Ring>> catalog_rings() {
  return {{"au", catalog::au_ring()},
          {"bu", catalog::bu_ring()},
          {"aaut", catalog::aaut_ring()},
          {"refl:2", catalog::reflection_ring(2)},
          {"refl:3", catalog::reflection_ring(3)},
          {"bu*bu", bubu()},
          {"au*refl:2", Ring::free_product({catalog::au_ring(), catalog::reflection_ring(2)})}};
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Outcome fusion_rules() {
  Outcome o;
  const auto au = catalog::au_ring();
  if (au.product(w({0}), w({1})) != terms({Simple{}, w({0, 1})})) o.fail("a a*");
  if (au.product(w({0, 1}), w({0, 1})) != terms({Simple{}, w({0, 1}), w({0, 1, 0, 1})})) o.fail("(a a*)^2");
  if (catalog::aaut_ring().product(w({0}), w({0})) != terms({Simple{}, w({0}), w({0, 0})})) o.fail("r^2 over aaut");
  for (std::int64_t s : {2, 3, 5, 7}) {
    const auto r = catalog::reflection_ring(static_cast<std::uint64_t>(s));
    for (std::int64_t x = 0; x < s; ++x) {
      const std::int64_t y = (s - x) % s;
      if (r.product(w({x}), w({y})) != terms({Simple{}, w({0}), w({x, y})}))
        o.fail("cyclic(" + std::to_string(s) + ") x=" + std::to_string(x));
    }
  }
  return o;
}

Outcome su2_oracle() {
  Outcome o;
  const auto bu = catalog::bu_ring();
  for (std::size_t m = 0; m <= 5; ++m)
    for (std::size_t n = 0; n <= 5; ++n) {
      Combination<Simple> cg;
      for (std::size_t k = 0; k <= std::min(m, n); ++k) cg.add(power(m + n - 2 * k), 1);
      if (bu.product(power(m), power(n)) != cg) o.fail("r^" + std::to_string(m) + " r^" + std::to_string(n));
    }
  // Spin m/2 has dimension m + 1 with dim r = 2; 2m + 1 is the SO(3) count,
  // reproduced over aaut with dim r = 3.
  DimensionFunction su2(catalog::bu(), letter_dimensions({{Letter{0}, 2}}));
  DimensionFunction so3(catalog::aaut(), letter_dimensions({{Letter{0}, 3}}));
  for (int m = 0; m <= 8; ++m) {
    const Word x(std::vector<Letter>(static_cast<std::size_t>(m), Letter{0}));
    if (su2(x) != m + 1) o.fail("dim r^" + std::to_string(m) + " over bu");
    if (so3(x) != 2 * m + 1) o.fail("dim r^" + std::to_string(m) + " over aaut");
  }
  if (o.pass) o.detail = "Clebsch-Gordan m,n<=5; dims m+1 (bu, dim r=2) and 2m+1 (aaut, dim r=3)";
  return o;
}

Outcome associativity_suite() {
  Outcome o;
  const auto start = Clock::now();
  for (const auto& [name, r] : catalog_rings()) {
    const auto xs = r.enumerate_simples(3);
    std::vector<std::vector<Combination<Simple>>> prod(xs.size(), std::vector<Combination<Simple>>(xs.size()));
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < xs.size(); ++j) {
        prod[i][j] = r.product(xs[i], xs[j]);
        if (r.dual(prod[i][j]) != r.product(r.dual(xs[j]), r.dual(xs[i]))) o.fail(name + " dual");
      }
    for (std::size_t i = 0; i < xs.size() && o.pass; ++i)
      for (std::size_t j = 0; j < xs.size(); ++j)
        for (std::size_t k = 0; k < xs.size(); ++k) {
          const Combination<Simple> z(xs[k]);
          if (r.product(prod[i][j], z) != r.product(Combination<Simple>(xs[i]), prod[j][k])) {
            o.fail(name + " associativity at " + r.format(xs[i]) + " " + r.format(xs[j]) + " " + r.format(xs[k]));
            break;
          }
        }
  }
  const double t = seconds_since(start);
  if (t > kBudgetAssociativity) o.fail("runtime " + std::to_string(t) + " s over budget");
  if (o.pass) o.detail = "7 rings, length <= 3, " + std::to_string(static_cast<int>(t)) + " s";
  return o;
}

Outcome domination() {
  Outcome o;
  for (const auto& d : {catalog::au(), catalog::reflection(3)}) {
    const auto ws = enumerate_words(d, 3, std::nullopt);
    for (const auto& x : ws)
      for (const auto& y : ws)
        for (const auto& t : ws) {
          const auto lhs = SemiringElement(d, multiply(d, x, y));
          const auto rhs = SemiringElement(d, multiply(d, concat(x, t), concat(word_dual(d, t), y)));
          if (!leq(lhs, rhs)) o.fail(format_word(d, x) + " " + format_word(d, y) + " " + format_word(d, t));
        }
  }
  return o;
}

Outcome free_product_check() {
  Outcome o;
  const std::vector<std::pair<std::string, std::vector<FusionDatum>>> pairs{
      {"bu,bu", {catalog::bu(), catalog::bu()}},
      {"au,refl:2", {catalog::au(), catalog::reflection(2)}},
      {"bu,aaut", {catalog::bu(), catalog::aaut()}}};
  for (const auto& [name, data] : pairs)
    if (!free_product_consistency(data, 3).ok()) o.fail(name);
  return o;
}

Outcome chain_groups() {
  Outcome o;
  auto expect = [&](const Ring& r, const std::string& want) {
    const auto g = chain_group_of(r);
    if (g.describe() != want) o.fail(r.name() + " gave " + g.describe());
    const auto cmp = compare_with_oracle(g, bounded_chain_oracle(r, 4));
    if (!cmp.agree()) o.fail(r.name() + (cmp.bound_insufficient() ? " oracle split (bound)" : " oracle merge"));
  };
  expect(catalog::au_ring(), "Z");
  for (std::uint64_t s : {2, 3, 4, 5}) expect(catalog::reflection_ring(s), "Z/" + std::to_string(s));
  expect(catalog::bu_ring(), "Z/2");
  expect(catalog::aaut_ring(), "1");
  expect(bubu(), "Z/2 * Z/2");
  expect(Ring::free_product({catalog::au_ring(), catalog::reflection_ring(2)}), "Z * Z/2");
  expect(Ring::free_product({catalog::au_ring(), catalog::reflection_ring(3)}), "Z * Z/3");
  expect(Ring::free_product({catalog::bu_ring(), catalog::aaut_ring()}), "Z/2");
  return o;
}

std::set<Simple> filtered(const std::vector<Simple>& xs, const std::function<bool(const Word&)>& keep) {
  std::set<Simple> out;
  for (const auto& x : xs)
    if (keep(x.word())) out.insert(x);
  return out;
}

Outcome cocenter_characterizations() {
  Outcome o;
  std::vector<std::string> notes;
  auto run = [&](const std::string& name, const Ring& r, const std::set<Simple>* expected) {
    const auto rep = crosscheck_alt_descr(r, 4, 2);
    if (!rep.refutations.empty()) o.fail(name + ": " + r.format(rep.refutations.front()) + " has nontrivial degree");
    if (!rep.b_not_a.empty())
      o.fail(name + ": " + std::to_string(rep.b_not_a.size()) + " simples in (b) not in (a), e.g. " +
             r.format(rep.b_not_a.front()));
    if (!rep.bound_sensitive.empty()) o.fail(name + ": bound-sensitive " + r.format(rep.bound_sensitive.front()));
    if (expected) {
      std::set<Simple> found;
      for (const auto& e : rep.entries)
        if (e.by_degree && e.by_char_a && e.by_char_b) found.insert(e.simple);
      if (found != *expected) o.fail(name + ": agreed set differs from the expected words");
    }
  };
  const auto au = catalog::au_ring();
  const auto balanced = filtered(au.enumerate_simples(4), [](const Word& x) {
    long b = 0;
    for (auto l : x) b += l.id == 0 ? 1 : -1;
    return b == 0;
  });
  run("au", au, &balanced);
  const auto c3 = catalog::reflection_ring(3);
  const auto zero_sum = filtered(c3.enumerate_simples(4), [](const Word& x) {
    std::int64_t s = 0;
    for (auto l : x) s += l.id;
    return s % 3 == 0;
  });
  run("refl:3", c3, &zero_sum);
  run("bu*bu", bubu(), nullptr);
  return o;
}

Outcome simplicity() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t generators = 0;
  for (const auto& [name, r] : catalog_rings()) {
    const auto rep = bounded_simplicity_check(r, 2, 6);
    generators += rep.verdicts.size();
    for (const auto& v : rep.verdicts)
      if (!v.saturates) o.fail(name + ": " + r.format(v.generator) + " stuck, missing " + r.format(*v.witness));
  }
  const double t = seconds_since(start);
  if (t > kBudgetSimplicity) o.fail("runtime " + std::to_string(t) + " s over budget");
  if (o.pass) o.detail = std::to_string(generators) + " generators saturate, " + std::to_string(static_cast<int>(t)) + " s";
  return o;
}

Outcome no_invertibles() {
  Outcome o;
  for (const auto& [name, r] : catalog_rings()) {
    if (r.factor_count() != 1) continue;
    for (const auto& x : r.enumerate_simples(4)) {
      if (x.empty()) continue;
      if (r.product(x, r.dual(x)).size() < 2) o.fail(name + " " + r.format(x));
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"fusion rules", fusion_rules},
      {"SU(2) oracle", su2_oracle},
      {"associativity and involution", associativity_suite},
      {"domination", domination},
      {"free-product consistency", free_product_check},
      {"chain groups", chain_groups},
      {"cocenter characterizations", cocenter_characterizations},
      {"simplicity", simplicity},
      {"no nontrivial invertibles", no_invertibles},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s criterion %zu: %s%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.empty() ? "" : " - ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
