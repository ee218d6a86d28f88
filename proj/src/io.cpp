#include "kalmbach/io.hpp"

#include <fstream>
#include <sstream>

namespace kalmbach {

namespace {

std::vector<std::string> string_list(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw ParseError(std::string("missing or non-array '") + key + "'");
  std::vector<std::string> out;
  for (const auto& v : j[key]) {
    if (!v.is_string())
      throw ParseError(std::string("non-string entry in '") + key + "'");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// parses the bracket rendering "[x1<x2<...]" back to a chain
Chain parse_chain_name(const BoundedPoset& p, const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("bad chain rendering '" + s + "'");
  Chain c;
  const std::string body = s.substr(1, s.size() - 2);
  if (body.empty()) return c;
  std::stringstream ss(body);
  std::string part;
  while (std::getline(ss, part, '<')) c.push_back(p.index_of(part));
  std::sort(c.begin(), c.end());
  return c;
}

}  // namespace

BoundedPoset parse_poset(const json& j) {
  RawPoset raw;
  raw.elements = string_list(j, "elements");
  if (!j.contains("relation") || !j["relation"].is_array())
    throw ParseError("missing or non-array 'relation'");
  for (const auto& pair : j["relation"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
        !pair[1].is_string())
      throw ParseError("relation entries must be [string, string] pairs");
    raw.relation.emplace_back(pair[0].get<std::string>(),
                              pair[1].get<std::string>());
  }
  if (j.contains("mode")) {
    const auto mode = j["mode"].get<std::string>();
    if (mode == "cover")
      raw.mode = ClosureMode::cover;
    else if (mode == "full")
      raw.mode = ClosureMode::full;
    else
      throw ParseError("mode must be 'cover' or 'full'");
  }
  if (j.contains("bottom")) raw.bottom = j["bottom"].get<std::string>();
  if (j.contains("top")) raw.top = j["top"].get<std::string>();
  return validate_poset(raw);
}

json serialize_poset(const BoundedPoset& p) {
  json j;
  j["elements"] = p.elements;
  json rel = json::array();
  for (const auto& [a, b] : covering_relation(p))
    rel.push_back(json::array({p.name(a), p.name(b)}));
  j["relation"] = rel;
  j["mode"] = "cover";
  j["bottom"] = p.name(p.bottom);
  j["top"] = p.name(p.top);
  return j;
}

EffectAlgebra parse_ea(const json& j) {
  EffectAlgebra e;
  e.elements = string_list(j, "elements");
  const int n = e.size();
  e.oplus.assign(n, std::vector<int>(n, EffectAlgebra::UNDEFINED));
  auto lookup = [&](const std::string& name) {
    for (int i = 0; i < n; ++i)
      if (e.elements[i] == name) return i;
    throw ParseError("unknown element '" + name + "'");
  };
  if (!j.contains("oplus") || !j["oplus"].is_array())
    throw ParseError("missing or non-array 'oplus'");
  for (const auto& triple : j["oplus"]) {
    if (!triple.is_array() || triple.size() != 3)
      throw ParseError("oplus entries must be [a, b, a+b] triples");
    const int a = lookup(triple[0].get<std::string>());
    const int b = lookup(triple[1].get<std::string>());
    const int c = lookup(triple[2].get<std::string>());
    if (e.oplus[a][b] >= 0 && e.oplus[a][b] != c)
      throw ParseError("conflicting oplus entries at (" + e.name(a) + "," +
                       e.name(b) + ")");
    e.oplus[a][b] = c;
  }
  if (!j.contains("zero") || !j.contains("one"))
    throw ParseError("missing 'zero' or 'one'");
  e.zero = lookup(j["zero"].get<std::string>());
  e.one = lookup(j["one"].get<std::string>());
  return e;
}

json serialize_ea(const EffectAlgebra& e) {
  json j;
  j["elements"] = e.elements;
  json table = json::array();
  for (int a = 0; a < e.size(); ++a)
    for (int b = 0; b < e.size(); ++b)
      if (e.defined(a, b))
        table.push_back(
            json::array({e.name(a), e.name(b), e.name(e.sum(a, b))}));
  j["oplus"] = table;
  j["zero"] = e.name(e.zero);
  j["one"] = e.name(e.one);
  return j;
}

OrthomodularPoset parse_omp(const json& j) {
  OrthomodularPoset a;
  a.carrier = parse_poset(j);
  if (!j.contains("complement") || !j["complement"].is_object())
    throw ParseError("missing or non-object 'complement'");
  a.complement.assign(a.size(), -1);
  for (const auto& [key, value] : j["complement"].items()) {
    if (!value.is_string()) throw ParseError("complement values must be strings");
    a.complement[a.carrier.index_of(key)] =
        a.carrier.index_of(value.get<std::string>());
  }
  for (int x : a.complement)
    if (x < 0) throw ParseError("complement map not total");
  return a;
}

json serialize_omp(const OrthomodularPoset& a) {
  json j = serialize_poset(a.carrier);
  json comp = json::object();
  for (int x = 0; x < a.size(); ++x)
    comp[a.carrier.name(x)] = a.carrier.name(a.complement[x]);
  j["complement"] = comp;
  return j;
}

MonadAlgebra parse_algebra(const json& j) {
  if (!j.contains("poset")) throw ParseError("missing 'poset'");
  MonadAlgebra m;
  m.carrier = parse_poset(j["poset"]);
  const auto kp = kalmbach_extend(m.carrier);
  m.alpha.assign(kp.chains.size(), -1);
  if (!j.contains("alpha") || !j["alpha"].is_array())
    throw ParseError("missing or non-array 'alpha'");
  for (const auto& pair : j["alpha"]) {
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError("alpha entries must be [chain, value] pairs");
    const Chain c = parse_chain_name(m.carrier, pair[0].get<std::string>());
    m.alpha[kp.id(c)] = m.carrier.index_of(pair[1].get<std::string>());
  }
  for (int v : m.alpha)
    if (v < 0) throw ParseError("alpha not total on the even chains");
  return m;
}

json serialize_algebra(const MonadAlgebra& m) {
  json j;
  j["poset"] = serialize_poset(m.carrier);
  const auto kp = kalmbach_extend(m.carrier);
  json alpha = json::array();
  for (size_t i = 0; i < kp.chains.size(); ++i)
    alpha.push_back(json::array({chain_name(m.carrier, kp.chains[i]),
                                 m.carrier.name(m.alpha[i])}));
  j["alpha"] = alpha;
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string dot_poset(const BoundedPoset& p) {
  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  for (const auto& name : p.elements) out += "  " + quoted(name) + ";\n";
  for (const auto& [a, b] : covering_relation(p))
    out += "  " + quoted(p.name(a)) + " -> " + quoted(p.name(b)) + ";\n";
  return out + "}\n";
}

std::string dot_omp(const OrthomodularPoset& a) {
  const auto& p = a.carrier;
  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  for (int x = 0; x < p.size(); ++x)
    out += "  " + quoted(p.name(x)) + " [label=\"" + p.name(x) + "\\n' = " +
           p.name(a.complement[x]) + "\"];\n";
  for (const auto& [x, y] : covering_relation(p))
    out += "  " + quoted(p.name(x)) + " -> " + quoted(p.name(y)) + ";\n";
  return out + "}\n";
}

}  // namespace kalmbach
