#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "kalmbach/io.hpp"

using namespace kalmbach;

namespace {

constexpr int EXIT_PARSE = 2;
constexpr int EXIT_VALIDATION = 3;
constexpr int EXIT_LAW = 4;

int size_cap(int fallback) {
  if (const char* env = std::getenv("KALMBACH_SIZE_CAP")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw ParseError("KALMBACH_SIZE_CAP must be an integer");
    }
  }
  return fallback;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot write '" + out_path + "'");
  out << text;
}

void emit_json(const json& j, const std::string& out_path) {
  emit(j.dump(2) + "\n", out_path);
}

// one report row per checked instance
struct Report {
  json rows = json::array();
  long instances = 0;
  long failures = 0;

  void add(const std::string& label, const Verdict& v, json extra = {}) {
    ++instances;
    if (!v) ++failures;
    json row;
    row["instance"] = label;
    row["pass"] = static_cast<bool>(v);
    if (!v) row["witness"] = v.witness;
    for (auto& [k, val] : extra.items()) row[k] = val;
    rows.push_back(std::move(row));
  }

  int finish(const std::string& out_path) const {
    json j;
    j["instances"] = instances;
    j["passes"] = instances - failures;
    j["failures"] = failures;
    j["results"] = rows;
    emit_json(j, out_path);
    return failures == 0 ? 0 : EXIT_LAW;
  }
};

std::string poset_label(const BoundedPoset& p) {
  std::string s = "{";
  for (const auto& [a, b] : covering_relation(p)) {
    if (s.size() > 1) s += ",";
    s += p.name(a) + "<" + p.name(b);
  }
  return s + "}";
}

int cmd_extend(const std::string& in, const std::string& out,
               const std::string& dot_out) {
  const auto p = parse_poset(load_json_file(in));
  const auto kp = kalmbach_extend(p);
  if (!dot_out.empty()) emit(dot_omp(kp.omp), dot_out);
  emit_json(serialize_omp(kp.omp), out);
  return 0;
}

int cmd_check(const std::string& in, const std::string& out) {
  const auto j = load_json_file(in);
  Verdict v;
  std::string kind;
  if (j.contains("alpha")) {
    kind = "algebra";
    v = check_algebra_laws(parse_algebra(j));
  } else if (j.contains("oplus")) {
    kind = "effect algebra";
    v = check_ea_axioms(parse_ea(j));
  } else if (j.contains("complement")) {
    kind = "orthomodular poset";
    v = check_omp_axioms(parse_omp(j));
  } else {
    kind = "bounded poset";
    v = check_poset_invariants(parse_poset(j));
  }
  json r;
  r["kind"] = kind;
  r["pass"] = static_cast<bool>(v);
  if (!v) r["witness"] = v.witness;
  emit_json(r, out);
  return v ? 0 : EXIT_LAW;
}

int cmd_laws(const std::string& scope, int max_size, std::uint64_t seed,
             std::size_t samples, const std::string& out) {
  const int cap = size_cap(scope == "algebra" ? 4 : 5);
  if (max_size > cap)
    throw CapExceeded("--max-size " + std::to_string(max_size) +
                      " exceeds the cap " + std::to_string(cap));
  Report report;
  if (scope == "monad") {
    for (int n = 2; n <= max_size; ++n)
      for (const auto& p : enumerate_bounded_posets(n, cap)) {
        MonadLawStats stats;
        const auto mode = n <= 3 ? AssocMode::exhaustive : AssocMode::sampled;
        const auto v = check_monad_laws(p, mode, seed, samples, &stats);
        json extra;
        extra["t_size"] = stats.t_size;
        extra["t2_size"] = stats.t2_size;
        extra["assoc_checked"] = stats.assoc_checked;
        extra["assoc_mode"] = mode == AssocMode::exhaustive ? "exhaustive"
                                                            : "sampled";
        report.add(poset_label(p), v, std::move(extra));
      }
  } else if (scope == "adjunction") {
    for (int n = 2; n <= max_size; ++n) {
      for (const auto& p : enumerate_bounded_posets(n, cap))
        report.add("triangle-left " + poset_label(p), check_triangle_left(p));
      for (const auto& a : enumerate_omps(n, cap))
        report.add("triangle-right " + poset_label(a.carrier),
                   check_triangle_right(a));
    }
  } else if (scope == "algebra") {
    for (int n = 2; n <= max_size; ++n)
      for (const auto& p : enumerate_bounded_posets(n, cap))
        for (const auto& m : enumerate_algebras(p, cap)) {
          report.add("laws " + poset_label(p), check_algebra_laws(m));
          report.add("aux " + poset_label(p), check_auxiliary_claim(m));
        }
  } else if (scope == "lemma1") {
    for (int n = 2; n <= max_size; ++n)
      for (const auto& e : enumerate_effect_algebras(n, cap))
        report.add("lemma1 " + poset_label(derived_order(e)), lemma1_suite(e));
  } else {
    throw ParseError("unknown scope '" + scope + "'");
  }
  return report.finish(out);
}

int cmd_roundtrip(const std::string& direction, int max_size,
                  const std::string& out) {
  const int cap = size_cap(direction == "GE" ? 4 : 5);
  if (max_size > cap)
    throw CapExceeded("--max-size " + std::to_string(max_size) +
                      " exceeds the cap " + std::to_string(cap));
  Report report;
  if (direction == "EG") {
    for (int n = 2; n <= max_size; ++n)
      for (const auto& e : enumerate_effect_algebras(n, cap))
        report.add("EG " + poset_label(derived_order(e)), roundtrip_eg(e));
  } else if (direction == "GE") {
    for (int n = 2; n <= max_size; ++n) {
      const auto eas = enumerate_effect_algebras(n, cap);
      for (const auto& p : enumerate_bounded_posets(n, cap)) {
        const auto algebras = enumerate_algebras(p, cap);
        long matching = 0;
        for (const auto& e : eas)
          if (derived_order(e) == p) ++matching;
        json extra;
        extra["algebras"] = algebras.size();
        extra["effect_algebras"] = matching;
        Verdict counts = static_cast<long>(algebras.size()) == matching
                             ? Verdict::pass()
                             : Verdict::fail("count mismatch");
        report.add("counts " + poset_label(p), counts, std::move(extra));
        for (const auto& m : algebras)
          report.add("GE " + poset_label(p), roundtrip_ge(m));
      }
    }
  } else if (direction == "DP") {
    for (int n = 2; n <= max_size; ++n)
      for (const auto& e : enumerate_effect_algebras(n, cap)) {
        const auto d = ea_to_dposet(e);
        Verdict v = check_dposet_axioms(d);
        if (v && !(dposet_to_ea(d) == e))
          v = Verdict::fail("dposet_to_ea(ea_to_dposet(E)) != E");
        report.add("DP " + poset_label(derived_order(e)), v);
      }
  } else {
    throw ParseError("unknown direction '" + direction + "'");
  }
  return report.finish(out);
}

int cmd_enumerate(const std::string& kind, int n, const std::string& out) {
  const int cap = size_cap(kind == "algebras" ? 4 : 5);
  json list = json::array();
  if (kind == "posets") {
    for (const auto& p : enumerate_bounded_posets(n, cap))
      list.push_back(serialize_poset(p));
  } else if (kind == "eas") {
    for (const auto& e : enumerate_effect_algebras(n, cap))
      list.push_back(serialize_ea(e));
  } else if (kind == "omps") {
    for (const auto& a : enumerate_omps(n, cap))
      list.push_back(serialize_omp(a));
  } else if (kind == "algebras") {
    for (const auto& p : enumerate_bounded_posets(n, cap))
      for (const auto& m : enumerate_algebras(p, cap))
        list.push_back(serialize_algebra(m));
  } else {
    throw ParseError("unknown kind '" + kind + "'");
  }
  json j;
  j["count"] = list.size();
  j["results"] = list;
  emit_json(j, out);
  return 0;
}

int cmd_render(const std::string& in, const std::string& out) {
  const auto j = load_json_file(in);
  std::string dot;
  if (j.contains("alpha"))
    dot = dot_poset(parse_algebra(j).carrier);
  else if (j.contains("oplus"))
    dot = dot_poset(derived_order(parse_ea(j)));
  else if (j.contains("complement"))
    dot = dot_omp(parse_omp(j));
  else
    dot = dot_poset(parse_poset(j));
  emit(dot, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kalmbach extension toolkit for finite bounded posets"};
  app.require_subcommand(1);

  std::string in, out, dot_out, scope, direction, kind;
  int max_size = 4;
  int size = 3;
  std::uint64_t seed = 0;
  std::size_t samples = 1000;

  auto* extend = app.add_subcommand("extend", "Build K(P) from a poset file");
  extend->add_option("input", in, "poset JSON file")->required();
  extend->add_option("-o,--output", out, "output file (default stdout)");
  extend->add_option("--dot", dot_out, "also write a DOT rendering here");

  auto* check = app.add_subcommand("check", "Validate a structure file");
  check->add_option("input", in, "structure JSON file")->required();
  check->add_option("-o,--output", out, "output file (default stdout)");

  auto* laws = app.add_subcommand("laws", "Run a law suite");
  laws->add_option("scope", scope, "monad|adjunction|algebra|lemma1")
      ->required();
  laws->add_option("--max-size", max_size, "largest carrier size");
  laws->add_option("--seed", seed, "seed for sampled checks");
  laws->add_option("--samples", samples, "sample count for sampled checks");
  laws->add_option("-o,--output", out, "output file (default stdout)");

  auto* roundtrip = app.add_subcommand("roundtrip", "Run a round-trip suite");
  roundtrip->add_option("direction", direction, "EG|GE|DP")->required();
  roundtrip->add_option("--max-size", max_size, "largest carrier size");
  roundtrip->add_option("-o,--output", out, "output file (default stdout)");

  auto* enumerate = app.add_subcommand("enumerate", "List small structures");
  enumerate->add_option("kind", kind, "posets|eas|omps|algebras")->required();
  enumerate->add_option("--size", size, "carrier size")->required();
  enumerate->add_option("-o,--output", out, "output file (default stdout)");

  auto* render = app.add_subcommand("render", "Emit a DOT Hasse diagram");
  render->add_option("input", in, "structure JSON file")->required();
  render->add_option("-o,--output", out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (extend->parsed()) return cmd_extend(in, out, dot_out);
    if (check->parsed()) return cmd_check(in, out);
    if (laws->parsed()) return cmd_laws(scope, max_size, seed, samples, out);
    if (roundtrip->parsed()) return cmd_roundtrip(direction, max_size, out);
    if (enumerate->parsed()) return cmd_enumerate(kind, size, out);
    if (render->parsed()) return cmd_render(in, out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return EXIT_PARSE;
  } catch (const Error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return EXIT_VALIDATION;
  }
  return 0;
}
