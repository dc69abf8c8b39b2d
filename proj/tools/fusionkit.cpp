// fusionkit: command-line front end.
// Exit status: 0 ok, 1 mismatch or stuck verdict, 2 usage or definition error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fusionkit/fusionkit.hpp"

namespace fk = fusionkit;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerdictFailed = 1;
constexpr int kUsage = 2;

struct Global {
  std::string format = "text";
  bool parallel = false;
  std::string letter_bound;
  std::string ring;

  bool as_json() const { return format == "json"; }

  std::optional<fk::LetterBound> bound() const {
    if (letter_bound.empty()) return std::nullopt;
    try {
      const auto colon = letter_bound.find(':', 1);
      if (colon == std::string::npos) {
        const auto n = std::stoll(letter_bound);
        if (n < 0) throw std::invalid_argument("negative");
        return fk::LetterBound{-n, n};
      }
      const auto lo = std::stoll(letter_bound.substr(0, colon));
      const auto hi = std::stoll(letter_bound.substr(colon + 1));
      if (lo > hi) throw std::invalid_argument("empty");
      return fk::LetterBound{lo, hi};
    } catch (const std::logic_error&) {
      throw fk::Error(fk::ErrorCode::invalid_definition,
                      "letter bound must be N or LO:HI, got \"" + letter_bound + "\"");
    }
  }
};

void emit(const Global& g, const json& j, const std::string& text) {
  if (g.as_json()) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

std::string join_formatted(const fk::Ring& ring, const std::vector<fk::Simple>& xs) {
  std::string out;
  for (const auto& x : xs) out += "  " + ring.format(x) + "\n";
  return out;
}

int cmd_decompose(const Global& g, const std::string& expr) {
  const auto ring = fk::io::parse_ring_spec(g.ring);
  const auto value = fk::evaluate(expr, ring);
  emit(g, {{"ring", ring.name()}, {"expression", expr}, {"element", fk::io::element_json(ring, value)}},
       ring.format(value) + "\n");
  return kOk;
}

int cmd_simples(const Global& g, std::size_t max_len) {
  const auto ring = fk::io::parse_ring_spec(g.ring);
  const auto xs = ring.enumerate_simples(max_len, g.bound());
  std::ostringstream text;
  text << "ring " << ring.name() << ", max_len " << max_len << ", " << xs.size() << " simples\n"
       << join_formatted(ring, xs);
  emit(g, {{"ring", ring.name()}, {"max_len", max_len}, {"simples", fk::io::simples_json(ring, xs)}}, text.str());
  return kOk;
}

json component_json(const fk::FreeProductGroup& group, std::uint32_t c) {
  const auto& comp = group.components()[c];
  json j{{"name", group.describe_component(c)}};
  if (auto cyc = std::get_if<fk::CyclicComponent>(&comp)) {
    j["order"] = cyc->order ? json(*cyc->order) : json("inf");
  } else {
    j["order"] = std::get<fk::FiniteGroup>(comp).order();
  }
  return j;
}

int cmd_chain_group(const Global& g, std::optional<std::size_t> oracle_len, std::size_t max_len) {
  const auto ring = fk::io::parse_ring_spec(g.ring);
  const auto bound = g.bound();
  const auto chain = fk::chain_group_or_oracle(ring, oracle_len.value_or(4), bound);
  const bool exact = chain.kind() == fk::ChainGroup::Kind::exact;
  const std::size_t list_len = exact ? max_len : std::min(max_len, chain.oracle().max_len());

  json j{{"ring", ring.name()}, {"kind", exact ? "exact" : "bounded-oracle"}, {"group", chain.describe()}};
  std::ostringstream text;
  text << "ring " << ring.name() << "\nchain group: " << chain.describe() << (exact ? "" : " [bounded]") << "\n";
  if (exact) {
    json comps = json::array();
    for (std::uint32_t c = 0; c < chain.group().components().size(); ++c) {
      comps.push_back(component_json(chain.group(), c));
      text << "  generator " << c << ": " << chain.group().describe_component(c) << "\n";
    }
    j["components"] = comps;
  }
  json degrees = json::array();
  text << "degrees (max_len " << list_len << "):\n";
  for (const auto& x : ring.enumerate_simples(list_len, bound)) {
    const auto d = chain.format(chain.degree(x));
    degrees.push_back({{"word", fk::io::simple_json(ring, x)}, {"degree", d}});
    text << "  " << ring.format(x) << " -> " << d << "\n";
  }
  j["max_len"] = list_len;
  j["degrees"] = degrees;

  int status = kOk;
  if (exact && oracle_len) {
    const auto oracle = fk::bounded_chain_oracle(ring, *oracle_len, bound);
    const auto cmp = fk::compare_with_oracle(chain, oracle);
    std::string verdict = cmp.agree() ? "agree" : (cmp.bound_insufficient() ? "oracle bound insufficient" : "mismatch");
    j["oracle"] = {{"max_len", *oracle_len}, {"classes", oracle.class_count()}, {"verdict", verdict}};
    text << "oracle (max_len " << *oracle_len << ", " << oracle.class_count() << " classes): " << verdict << "\n";
    if (!cmp.agree()) {
      const auto& w = cmp.merged_by_oracle ? *cmp.merged_by_oracle : *cmp.split_by_oracle;
      j["oracle"]["witness"] = {fk::io::simple_json(ring, w.first), fk::io::simple_json(ring, w.second)};
      text << "  witness: " << ring.format(w.first) << ", " << ring.format(w.second) << "\n";
      status = kVerdictFailed;
    }
  }
  emit(g, j, text.str());
  return status;
}

int cmd_cocenter(const Global& g, std::size_t max_len, bool crosscheck, std::size_t max_factors,
                 std::optional<std::size_t> oracle_len) {
  const auto ring = fk::io::parse_ring_spec(g.ring);
  const auto bound = g.bound();
  const auto chain = fk::chain_group_or_oracle(ring, oracle_len.value_or(max_len), bound);
  if (chain.kind() != fk::ChainGroup::Kind::exact && chain.oracle().max_len() < max_len)
    throw fk::Error(fk::ErrorCode::beyond_bound, "oracle length must be at least max_len");
  std::ostringstream text;
  json j{{"ring", ring.name()}, {"max_len", max_len}, {"chain_group", chain.describe()}};
  if (!crosscheck) {
    const auto slice = fk::cocenter_simples(ring, chain, max_len, bound);
    text << "cocenter of " << ring.name() << " (max_len " << max_len << "): " << slice.simples.size()
         << " simples\n" << join_formatted(ring, slice.simples);
    j["simples"] = fk::io::simples_json(ring, slice.simples);
    emit(g, j, text.str());
    return kOk;
  }
  const auto report = fk::crosscheck_alt_descr(ring, chain, max_len, max_factors, bound);
  j["max_factors"] = max_factors;
  j["verdict"] = report.ok() ? "ok" : "mismatch";
  json entries = json::array();
  text << "cocenter of " << ring.name() << " (max_len " << max_len << ", max_factors " << max_factors << ")\n"
       << "  simple  degree char-a char-b\n";
  auto mark = [](bool b) { return b ? "yes" : "no"; };
  for (const auto& e : report.entries) {
    entries.push_back({{"word", fk::io::simple_json(ring, e.simple)},
                       {"degree", e.by_degree},
                       {"char_a", e.by_char_a},
                       {"char_b", e.by_char_b}});
    text << "  " << ring.format(e.simple) << "  " << mark(e.by_degree) << " " << mark(e.by_char_a) << " "
         << mark(e.by_char_b) << "\n";
  }
  j["entries"] = entries;
  j["refutations"] = fk::io::simples_json(ring, report.refutations);
  j["b_not_a"] = fk::io::simples_json(ring, report.b_not_a);
  j["bound_sensitive"] = fk::io::simples_json(ring, report.bound_sensitive);
  text << "verdict: " << (report.ok() ? "ok" : "mismatch") << "\n";
  if (!report.refutations.empty()) text << "refutations:\n" << join_formatted(ring, report.refutations);
  if (!report.b_not_a.empty()) text << "in (b) but not (a):\n" << join_formatted(ring, report.b_not_a);
  if (!report.bound_sensitive.empty()) text << "bound-sensitive:\n" << join_formatted(ring, report.bound_sensitive);
  emit(g, j, text.str());
  return report.ok() ? kOk : kVerdictFailed;
}

int cmd_adclosure(const Global& g, const std::string& gens_text, std::size_t max_len) {
  const auto ring = fk::io::parse_ring_spec(g.ring);
  const auto gens = fk::io::parse_simple_list(ring, gens_text);
  fk::AdClosureOptions opts{g.bound(), g.parallel};
  const auto r = fk::ad_closure(ring, std::set<fk::Simple>(gens.begin(), gens.end()), max_len, opts);
  const std::vector<fk::Simple> members(r.result.simples.begin(), r.result.simples.end());
  std::ostringstream text;
  text << "ad-closure in " << ring.name() << " (max_len " << max_len << "): " << members.size() << " simples, "
       << r.rounds << " rounds, hit_bound " << (r.hit_bound ? "yes" : "no") << "\n"
       << join_formatted(ring, members);
  emit(g,
       {{"ring", ring.name()},
        {"max_len", max_len},
        {"generators", fk::io::simples_json(ring, r.generators)},
        {"rounds", r.rounds},
        {"hit_bound", r.hit_bound},
        {"simples", fk::io::simples_json(ring, members)}},
       text.str());
  return kOk;
}

int cmd_simplicity(const Global& g, std::size_t inner, std::size_t outer, std::optional<std::size_t> oracle_len) {
  const auto ring = fk::io::parse_ring_spec(g.ring);
  const auto bound = g.bound();
  const auto chain = fk::chain_group_or_oracle(ring, oracle_len.value_or(outer), bound);
  const auto report = fk::bounded_simplicity_check(ring, chain, inner, outer, {bound, g.parallel});
  std::ostringstream text;
  text << "simplicity of " << ring.name() << " (inner " << inner << ", outer " << outer << "), "
       << report.targets.size() << " cocenter simples in range\n";
  json verdicts = json::array();
  for (const auto& v : report.verdicts) {
    const std::string verdict = v.saturates ? "saturates(" + std::to_string(inner) + ")" : "stuck";
    text << "  " << ring.format(v.generator) << ": " << verdict << ", closure " << v.closure_size << ", rounds "
         << v.rounds << ", hit_bound " << (v.hit_bound ? "yes" : "no");
    json e{{"generator", fk::io::simple_json(ring, v.generator)},
           {"verdict", verdict},
           {"closure_size", v.closure_size},
           {"rounds", v.rounds},
           {"hit_bound", v.hit_bound},
           {"stopped_early", v.stopped_early}};
    if (v.witness) {
      text << ", missing " << ring.format(*v.witness);
      e["missing"] = fk::io::simple_json(ring, *v.witness);
    }
    text << "\n";
    verdicts.push_back(std::move(e));
  }
  const bool ok = report.all_saturate();
  if (!ok) text << "STUCK: a generator fails to saturate the cocenter slice\n";
  emit(g,
       {{"ring", ring.name()},
        {"inner", inner},
        {"outer", outer},
        {"chain_group", chain.describe()},
        {"verdicts", verdicts},
        {"verdict", ok ? "saturates" : "stuck"}},
       text.str());
  return ok ? kOk : kVerdictFailed;
}

int cmd_validate(const Global& g) {
  // Data are loaded unchecked so that violations are reported, not thrown.
  const auto ring = fk::io::parse_ring_spec(g.ring, fk::Checking::unchecked);
  std::ostringstream text;
  json factors = json::array();
  bool ok = true;
  for (std::size_t f = 0; f < ring.factor_count(); ++f) {
    const auto& factor = ring.factor(f);
    json e{{"factor", factor.label()}};
    std::string line = "  " + factor.label() + ": ";
    if (auto free = dynamic_cast<const fk::FreeDatumRing*>(&factor)) {
      const auto report = fk::validate_datum(free->datum());
      if (report.ok()) {
        e["verdict"] = "ok";
        line += "datum axioms hold";
      } else {
        ok = false;
        const auto& v = *report.violation;
        json witness = json::array();
        for (auto l : v.witness) witness.push_back(free->datum().name(l));
        e["verdict"] = "violation";
        e["kind"] = std::string(fk::to_string(v.kind));
        e["witness"] = witness;
        e["message"] = v.message;
        line += std::string(fk::to_string(v.kind)) + ": " + v.message;
      }
    } else {
      e["verdict"] = "ok";
      line += "table verified at load";
    }
    factors.push_back(std::move(e));
    text << line << "\n";
  }
  emit(g, {{"ring", ring.name()}, {"factors", factors}, {"verdict", ok ? "ok" : "violation"}},
       "validate " + ring.name() + "\n" + text.str() + (ok ? "ok\n" : "violation\n"));
  return ok ? kOk : kVerdictFailed;
}

int cmd_freeprod_check(const Global& g, const std::string& specs, std::size_t max_len) {
  std::vector<fk::FusionDatum> data;
  std::string names;
  for (const auto& spec : fk::io::detail::split(specs, ',')) {
    const auto ring = fk::io::parse_ring_spec(spec);
    const auto* free = ring.factor_count() == 1 ? dynamic_cast<const fk::FreeDatumRing*>(&ring.factor(0)) : nullptr;
    if (!free) throw fk::Error(fk::ErrorCode::invalid_definition, "freeprod-check needs datum rings, got " + spec);
    data.push_back(free->datum());
    names += (names.empty() ? "" : ", ") + spec;
  }
  const auto report = fk::free_product_consistency(data, max_len, g.bound());
  std::ostringstream text;
  text << "free-product consistency of (" << names << ") at max_len " << max_len << ": "
       << (report.ok() ? "ok" : "mismatch") << " (" << report.pairs_checked << " pairs)\n";
  json j{{"rings", names}, {"max_len", max_len}, {"pairs_checked", report.pairs_checked},
         {"verdict", report.ok() ? "ok" : "mismatch"}};
  if (report.mismatch) {
    const auto& m = *report.mismatch;
    const auto fp = fk::Ring::free_product([&] {
      std::vector<fk::Ring> rs;
      for (const auto& d : data) rs.push_back(fk::Ring::free(d));
      return rs;
    }());
    auto words = [&](const fk::Combination<fk::Word>& c) {
      std::string out;
      for (const auto& [w, n] : c) out += (out.empty() ? "" : " + ") + n.str() + " " + fk::format_word(fk::FusionDatum::disjoint_union(data), w);
      return out.empty() ? std::string("0") : out;
    };
    text << "  x = " << fp.format(m.x) << ", y = " << fp.format(m.y) << "\n"
         << "  union datum:  " << words(m.from_union) << "\n"
         << "  free product: " << words(m.from_free_product) << "\n";
    j["witness"] = {{"x", fk::io::simple_json(fp, m.x)}, {"y", fk::io::simple_json(fp, m.y)},
                    {"union", words(m.from_union)}, {"free_product", words(m.from_free_product)}};
  }
  emit(g, j, text.str());
  return report.ok() ? kOk : kVerdictFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fusionkit: fusion semirings of free quantum groups and their free products"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--parallel", g.parallel, "Parallel saturation");
  app.add_option("--letter-bound", g.letter_bound, "Letter range N (meaning -N:N) or LO:HI for infinite alphabets");

  std::string expr, gens, rings;
  std::size_t max_len = 3, inner = 2, outer = 6, max_factors = 2;
  std::optional<std::size_t> oracle_len;
  bool crosscheck = false;

  auto* decompose = app.add_subcommand("decompose", "Decompose an expression into simples");
  decompose->add_option("--ring", g.ring)->required();
  decompose->add_option("expr", expr)->required();

  auto* simples = app.add_subcommand("simples", "List simples up to a length");
  simples->add_option("--ring", g.ring)->required();
  simples->add_option("--max-len", max_len)->required();

  auto* chain = app.add_subcommand("chain-group", "Chain group and degrees");
  chain->add_option("--ring", g.ring)->required();
  chain->add_option("--oracle-len", oracle_len, "Bounded oracle length (also compared with exact degrees)");
  chain->add_option("--max-len", max_len, "Length of the degree listing")->capture_default_str();

  auto* cocenter = app.add_subcommand("cocenter", "Cocenter slice");
  cocenter->add_option("--ring", g.ring)->required();
  cocenter->add_option("--max-len", max_len)->required();
  cocenter->add_flag("--crosscheck", crosscheck);
  cocenter->add_option("--max-factors", max_factors)->capture_default_str();
  cocenter->add_option("--oracle-len", oracle_len);

  auto* adclosure = app.add_subcommand("adclosure", "Ad-invariant closure of generators");
  adclosure->add_option("--ring", g.ring)->required();
  adclosure->add_option("--gens", gens, "Bracketed words, e.g. \"[a a*] [a* a]\"")->required();
  adclosure->add_option("--max-len", max_len)->required();

  auto* simplicity = app.add_subcommand("simplicity", "Bounded simplicity check of the cocenter");
  simplicity->add_option("--ring", g.ring)->required();
  simplicity->add_option("--inner", inner)->required();
  simplicity->add_option("--outer", outer)->required();
  simplicity->add_option("--oracle-len", oracle_len);

  auto* validate = app.add_subcommand("validate", "Check the axioms of a ring definition");
  validate->add_option("--ring", g.ring)->required();

  auto* freeprod = app.add_subcommand("freeprod-check", "Compare the two free-product constructions");
  freeprod->add_option("--rings", rings, "Comma-separated datum specs")->required();
  freeprod->add_option("--max-len", max_len)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (decompose->parsed()) return cmd_decompose(g, expr);
    if (simples->parsed()) return cmd_simples(g, max_len);
    if (chain->parsed()) return cmd_chain_group(g, oracle_len, max_len);
    if (cocenter->parsed()) return cmd_cocenter(g, max_len, crosscheck, max_factors, oracle_len);
    if (adclosure->parsed()) return cmd_adclosure(g, gens, max_len);
    if (simplicity->parsed()) return cmd_simplicity(g, inner, outer, oracle_len);
    if (validate->parsed()) return cmd_validate(g);
    if (freeprod->parsed()) return cmd_freeprod_check(g, rings, max_len);
  } catch (const fk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
