#pragma once

// Definition files and ring specifications.
//
// Ring specs: au | bu | aaut | refl:<s> | refl:inf | group:<file> |
// table:<file> | datum:<file> | file:<file> | freeprod:<spec>,<spec>,... |
// <spec>*<spec>. Files are JSON with a "kind" field:
//   datum  {"kind":"table","letters":[..],"involution":{..},"fusion":{..}}
//          {"kind":"cyclic","s":3} or {"kind":"cyclic","s":"inf"}
//   group  {"kind":"group","order":n,"table":[[..]],"names":[..]}
//   table  {"kind":"table","simples":[..],"dual":[..],"N":{"x":{"y":{"z":n}}}}
//   free product {"kind":"freeprod","factors":[<spec or object>, ..]}

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fusionkit/datum.hpp"
#include "fusionkit/expression.hpp"
#include "fusionkit/finite_group.hpp"
#include "fusionkit/ring.hpp"

namespace fusionkit::io {

using nlohmann::json;

inline json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::invalid_definition, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::invalid_definition, path.string() + ": " + e.what());
  }
}

namespace detail {

[[noreturn]] inline void bad(const std::string& what) { throw Error(ErrorCode::invalid_definition, what); }

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) bad(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline std::size_t index_of(const std::map<std::string, std::size_t>& index, const std::string& name,
                            const char* what) {
  auto it = index.find(name);
  if (it == index.end()) bad(std::string("unknown ") + what + " \"" + name + "\"");
  return it->second;
}

inline std::map<std::string, std::size_t> index_names(const std::vector<std::string>& names, const char* what) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!index.emplace(names[i], i).second) bad(std::string("duplicate ") + what + " \"" + names[i] + "\"");
  return index;
}

inline std::size_t count_value(const json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    bad("multiplicities must be nonnegative integers");
  return j.get<std::size_t>();
}

}  // namespace detail

/// `fusion` is either nested ({"a":{"b":"c"}}) or a list of [a, b, c].
inline FusionDatum datum_from_json(const json& j, Checking checking = Checking::enforce) {
  const std::string kind = detail::field(j, "kind").get<std::string>();
  if (kind == "cyclic") {
    const json& s = detail::field(j, "s");
    if (s.is_string()) {
      if (s.get<std::string>() != "inf") detail::bad("cyclic modulus must be a positive integer or \"inf\"");
      return FusionDatum::cyclic(std::nullopt);
    }
    if (!s.is_number_integer() || s.get<std::int64_t>() <= 0)
      detail::bad("cyclic modulus must be a positive integer or \"inf\"");
    return FusionDatum::cyclic(s.get<std::uint64_t>());
  }
  if (kind != "table") detail::bad("unknown datum kind \"" + kind + "\"");

  const auto names = detail::string_list(detail::field(j, "letters"), "letters");
  const auto index = detail::index_names(names, "letter");
  const json& inv = detail::field(j, "involution");
  if (!inv.is_object()) detail::bad("involution must map letter names to letter names");
  std::vector<std::size_t> involution(names.size(), names.size());
  for (const auto& [k, v] : inv.items()) {
    if (!v.is_string()) detail::bad("involution must map letter names to letter names");
    involution[detail::index_of(index, k, "letter")] = detail::index_of(index, v.get<std::string>(), "letter");
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    if (involution[i] == names.size()) detail::bad("involution undefined on \"" + names[i] + "\"");

  FusionDatum::FusionTable fusion;
  auto put = [&](const std::string& a, const std::string& b, const std::string& c) {
    const auto key = std::make_pair(detail::index_of(index, a, "letter"), detail::index_of(index, b, "letter"));
    if (!fusion.emplace(key, detail::index_of(index, c, "letter")).second)
      detail::bad("fusion defined twice for (" + a + ", " + b + ")");
  };
  const json fu = j.value("fusion", json::object());
  if (fu.is_object()) {
    for (const auto& [a, row] : fu.items()) {
      if (!row.is_object()) detail::bad("fusion rows must be objects");
      for (const auto& [b, c] : row.items()) {
        if (!c.is_string()) detail::bad("fusion values must be letter names");
        put(a, b, c.get<std::string>());
      }
    }
  } else if (fu.is_array()) {
    for (const auto& t : fu) {
      const auto abc = detail::string_list(t, "fusion entries");
      if (abc.size() != 3) detail::bad("fusion entries must be [a, b, c]");
      put(abc[0], abc[1], abc[2]);
    }
  } else {
    detail::bad("fusion must be an object or an array");
  }
  return FusionDatum::table(names, std::move(involution), std::move(fusion), checking);
}

inline FiniteGroup group_from_json(const json& j) {
  const json& t = detail::field(j, "table");
  if (!t.is_array()) detail::bad("group table must be an array of rows");
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : t) {
    if (!row.is_array()) detail::bad("group table must be an array of rows");
    auto& r = table.emplace_back();
    for (const auto& e : row) r.push_back(detail::count_value(e));
  }
  if (j.contains("order") && detail::count_value(j.at("order")) != table.size())
    detail::bad("group order does not match the table");
  std::vector<std::string> names;
  if (j.contains("names")) names = detail::string_list(j.at("names"), "names");
  return FiniteGroup(std::move(table), std::move(names));
}

/// The first listed simple is the unit.
inline FusionRingTable fusion_table_from_json(const json& j) {
  const auto names = detail::string_list(detail::field(j, "simples"), "simples");
  const auto index = detail::index_names(names, "simple");
  const json& d = detail::field(j, "dual");
  std::vector<std::size_t> dual;
  if (d.is_array()) {
    for (const auto& e : d) dual.push_back(detail::index_of(index, e.get<std::string>(), "simple"));
  } else if (d.is_object()) {
    dual.assign(names.size(), names.size());
    for (const auto& [k, v] : d.items()) dual[detail::index_of(index, k, "simple")] = detail::index_of(index, v.get<std::string>(), "simple");
    for (std::size_t i = 0; i < names.size(); ++i)
      if (dual[i] == names.size()) detail::bad("dual undefined on \"" + names[i] + "\"");
  } else {
    detail::bad("dual must be a list or an object");
  }
  FusionRingTable::Products products;
  const json& n = detail::field(j, "N");
  if (!n.is_object()) detail::bad("N must be nested objects x -> y -> z -> multiplicity");
  for (const auto& [x, row] : n.items()) {
    for (const auto& [y, terms] : row.items()) {
      auto& slot = products[{detail::index_of(index, x, "simple"), detail::index_of(index, y, "simple")}];
      for (const auto& [z, m] : terms.items()) {
        const std::size_t c = detail::count_value(m);
        if (c) slot[detail::index_of(index, z, "simple")] = c;
      }
    }
  }
  return FusionRingTable(names, std::move(dual), std::move(products));
}

Ring parse_ring_spec(std::string_view spec, Checking checking = Checking::enforce,
                     const std::filesystem::path& base = {});

inline Ring ring_from_json(const json& j, const std::string& label, Checking checking = Checking::enforce,
                           const std::filesystem::path& base = {}) {
  const std::string kind = detail::field(j, "kind").get<std::string>();
  if (kind == "group") return Ring::group(group_from_json(j), label);
  if (kind == "table" && j.contains("simples")) return Ring::table(fusion_table_from_json(j), label);
  if (kind == "table" || kind == "cyclic") return Ring::free(datum_from_json(j, checking), label);
  if (kind == "freeprod") {
    const json& fs = detail::field(j, "factors");
    if (!fs.is_array() || fs.empty()) detail::bad("freeprod needs a nonempty factor list");
    std::vector<Ring> rings;
    for (const auto& f : fs) {
      if (f.is_string()) rings.push_back(parse_ring_spec(f.get<std::string>(), checking, base));
      else rings.push_back(ring_from_json(f, "factor", checking, base));
    }
    return Ring::free_product(rings);
  }
  detail::bad("unknown ring kind \"" + kind + "\"");
}

inline Ring ring_from_file(const std::filesystem::path& path, Checking checking = Checking::enforce) {
  return ring_from_json(read_json_file(path), path.stem().string(), checking, path.parent_path());
}

namespace detail {

inline std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto at = text.find(sep, start);
    out.emplace_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

inline std::filesystem::path resolve_path(const std::string& file, const std::filesystem::path& base) {
  std::filesystem::path p(file);
  if (p.is_relative() && !base.empty() && !std::filesystem::exists(p)) return base / p;
  return p;
}

}  // namespace detail

inline Ring parse_ring_spec(std::string_view spec, Checking checking, const std::filesystem::path& base) {
  const std::string s(spec);
  if (s.empty()) detail::bad("empty ring spec");
  if (s.rfind("freeprod:", 0) == 0) {
    std::vector<Ring> rings;
    for (const auto& part : detail::split(std::string_view(s).substr(9), ','))
      rings.push_back(parse_ring_spec(part, checking, base));
    return Ring::free_product(rings);
  }
  if (s.find('*') != std::string::npos) {
    std::vector<Ring> rings;
    for (const auto& part : detail::split(s, '*')) rings.push_back(parse_ring_spec(part, checking, base));
    return Ring::free_product(rings);
  }
  if (s == "au") return catalog::au_ring();
  if (s == "bu") return catalog::bu_ring();
  if (s == "aaut") return catalog::aaut_ring();
  if (s.rfind("refl:", 0) == 0) {
    const std::string arg = s.substr(5);
    if (arg == "inf") return catalog::reflection_ring(std::nullopt);
    if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos || arg.size() > 18)
      detail::bad("refl expects a positive integer or inf, got \"" + arg + "\"");
    const auto n = std::stoull(arg);
    if (n == 0) detail::bad("refl expects a positive integer or inf");
    return catalog::reflection_ring(n);
  }
  for (const char* prefix : {"group:", "table:", "datum:", "file:"}) {
    const std::string p(prefix);
    if (s.rfind(p, 0) != 0) continue;
    const auto path = detail::resolve_path(s.substr(p.size()), base);
    const json j = read_json_file(path);
    const std::string kind = j.value("kind", "");
    const std::string label = path.stem().string();
    if (p == "group:" && kind != "group") detail::bad(path.string() + " is not a group table");
    if (p == "table:" && !(kind == "table" && j.contains("simples")))
      detail::bad(path.string() + " is not a fusion table");
    if (p == "datum:" && !(kind == "cyclic" || (kind == "table" && j.contains("letters"))))
      detail::bad(path.string() + " is not a datum");
    return ring_from_json(j, label, checking, path.parent_path());
  }
  detail::bad("unknown ring spec \"" + s + "\"");
}

/// Simples written as bracketed words, separated by spaces or commas.
inline std::vector<Simple> parse_simple_list(const Ring& ring, std::string_view text) {
  std::vector<Simple> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == ',' || c == '\t' || c == '\n') {
      ++i;
      continue;
    }
    if (c != '[') throw SyntaxError(ErrorCode::syntax_error, 1, i + 1, "expected '['");
    const auto close = text.find(']', i);
    if (close == std::string_view::npos) throw SyntaxError(ErrorCode::syntax_error, 1, i + 1, "unterminated word");
    const auto e = parse_expression(text.substr(i, close - i + 1));
    out.push_back(resolve(ring, std::get<WordLit>(e->node)));
    i = close + 1;
  }
  return out;
}

// --- structured output -----------------------------------------------------

inline json coeff_json(const Coeff& c) {
  if (c <= std::numeric_limits<std::int64_t>::max()) return json(static_cast<std::int64_t>(c));
  return json(c.str());
}

inline json simple_json(const Ring& ring, const Simple& x) {
  json word = json::array();
  for (const auto& a : x.atoms()) word.push_back(ring.atom_name(a));
  return word;
}

/// Sorted (word, coefficient) pairs in canonical order.
inline json element_json(const Ring& ring, const Combination<Simple>& a) {
  json terms = json::array();
  for (const auto& [x, c] : a) terms.push_back({{"word", simple_json(ring, x)}, {"coefficient", coeff_json(c)}});
  return terms;
}

template <class Range>
json simples_json(const Ring& ring, const Range& simples) {
  json out = json::array();
  for (const auto& x : simples) out.push_back(simple_json(ring, x));
  return out;
}

}  // namespace fusionkit::io
