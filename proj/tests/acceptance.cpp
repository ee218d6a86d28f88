// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits nonzero when any criterion fails.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kalmbach/algebra.hpp"
#include "kalmbach/io.hpp"

using namespace kalmbach;

namespace {

int failures = 0;

void report(int number, const std::string& title, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " " << number << ": " << title;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

std::vector<BoundedPoset> posets_up_to(int max) {
  std::vector<BoundedPoset> out;
  for (int n = 2; n <= max; ++n)
    for (auto& p : enumerate_bounded_posets(n)) out.push_back(std::move(p));
  return out;
}

// 1. every extension passes the OMP axioms
void criterion1() {
  long checked = 0;
  for (const auto& p : posets_up_to(5)) {
    const auto kp = kalmbach_extend(p);
    if (!check_omp_axioms(kp.omp)) {
      report(1, "K(P) is an orthomodular poset for all |P| <= 5", false);
      return;
    }
    ++checked;
  }
  report(1, "K(P) is an orthomodular poset for all |P| <= 5", true,
         std::to_string(checked) + " posets");
}

// 2. the unit embeds P into K(P)
void criterion2() {
  long checked = 0;
  for (const auto& p : posets_up_to(5)) {
    if (!check_embedding(p, kalmbach_extend(p))) {
      report(2, "eta is injective and order-reflecting for all |P| <= 5",
             false);
      return;
    }
    ++checked;
  }
  report(2, "eta is injective and order-reflecting for all |P| <= 5", true,
         std::to_string(checked) + " posets");
}

// 3. K(L) is a lattice whenever L is
void criterion3() {
  long checked = 0;
  for (const auto& p : posets_up_to(5)) {
    if (!is_lattice(p)) continue;
    if (!check_lattice_property(kalmbach_extend(p))) {
      report(3, "K(L) is an orthomodular lattice for every lattice |L| <= 5",
             false);
      return;
    }
    ++checked;
  }
  report(3, "K(L) is an orthomodular lattice for every lattice |L| <= 5",
         true, std::to_string(checked) + " lattices");
}

// 4. monad laws: units exhaustive to 5, associativity exhaustive to 3 and
// sampled (seed 0, 1000 draws) at 4
void criterion4() {
  for (const auto& p : posets_up_to(5)) {
    const auto kp = kalmbach_extend(p);
    if (!check_unit_laws(p, kp)) {
      report(4, "monad laws", false, "unit law");
      return;
    }
    if (p.size() <= 3) {
      if (!check_assoc_law(p, kp, AssocMode::exhaustive, 0, 0)) {
        report(4, "monad laws", false, "associativity exhaustive");
        return;
      }
    } else if (p.size() == 4) {
      MonadLawStats stats;
      if (!check_assoc_law(p, kp, AssocMode::sampled, 0, 1000, &stats) ||
          stats.assoc_checked < 1000) {
        report(4, "monad laws", false, "associativity sampled");
        return;
      }
    }
  }
  report(4, "monad laws (units <= 5, assoc exhaustive <= 3, sampled at 4)",
         true);
}

// 5. both triangle identities
void criterion5() {
  for (const auto& p : posets_up_to(4))
    if (!check_triangle_left(p)) {
      report(5, "adjunction triangle identities", false, "left");
      return;
    }
  for (int n = 2; n <= 5; ++n)
    for (const auto& l : enumerate_omps(n))
      if (!check_triangle_right(l)) {
        report(5, "adjunction triangle identities", false, "right");
        return;
      }
  report(5, "adjunction triangle identities (P <= 4, OMPs <= 5)", true);
}

// 6. naturality of eta (<= 4) and mu (<= 3)
void criterion6() {
  const auto posets = posets_up_to(4);
  for (const auto& p : posets)
    for (const auto& q : posets)
      for (const auto& f : enumerate_morphisms(p, q))
        if (!check_naturality_eta(f, p, q)) {
          report(6, "naturality of eta and mu", false, "eta");
          return;
        }
  for (const auto& p : posets)
    for (const auto& q : posets) {
      if (p.size() > 3 || q.size() > 3) continue;
      for (const auto& f : enumerate_morphisms(p, q))
        if (!check_naturality_mu(f, p, q)) {
          report(6, "naturality of eta and mu", false, "mu");
          return;
        }
    }
  report(6, "naturality of eta (<= 4) and mu (<= 3)", true);
}

// 7. objects: EG identity (<= 5), GE identity (<= 4), bijection counts
void criterion7() {
  for (int n = 2; n <= 5; ++n)
    for (const auto& e : enumerate_effect_algebras(n))
      if (!roundtrip_eg(e)) {
        report(7, "mutually inverse on objects", false, "EG");
        return;
      }
  for (int n = 2; n <= 4; ++n) {
    const auto eas = enumerate_effect_algebras(n);
    for (const auto& p : enumerate_bounded_posets(n, 4)) {
      const auto algebras = enumerate_algebras(p);
      long matching = 0;
      for (const auto& e : eas)
        if (derived_order(e) == p) ++matching;
      if (static_cast<long>(algebras.size()) != matching) {
        report(7, "mutually inverse on objects", false, "count mismatch");
        return;
      }
      for (const auto& m : algebras)
        if (!roundtrip_ge(m)) {
          report(7, "mutually inverse on objects", false, "GE");
          return;
        }
    }
  }
  report(7, "mutually inverse on objects (EG <= 5, GE and counts <= 4)", true);
}

// 8. morphisms: structure-map equation plus morphism-set agreement
void criterion8() {
  std::vector<EffectAlgebra> eas;
  for (int n = 2; n <= 4; ++n)
    for (auto& e : enumerate_effect_algebras(n)) eas.push_back(std::move(e));
  for (const auto& a : eas)
    for (const auto& b : eas)
      for (const auto& f : enumerate_ea_morphisms(a, b))
        if (!check_g_morphism_equation(f, a, b)) {
          report(8, "mutually inverse on morphisms", false, "equation");
          return;
        }
  for (const auto& a : eas)
    for (const auto& b : eas) {
      const auto ga = structure_map(a);
      const auto gb = structure_map(b);
      std::vector<int> f(a.size(), 0);
      bool ok = true;
      auto rec = [&](auto&& self, int i) -> void {
        if (!ok) return;
        if (i == a.size()) {
          if (static_cast<bool>(check_ea_morphism(f, a, b)) !=
              static_cast<bool>(check_algebra_morphism(f, ga, gb)))
            ok = false;
          return;
        }
        for (int v = 0; v < b.size(); ++v) {
          f[i] = v;
          self(self, i + 1);
        }
      };
      rec(rec, 0);
      if (!ok) {
        report(8, "mutually inverse on morphisms", false, "set mismatch");
        return;
      }
    }
  report(8, "mutually inverse on morphisms (EAs <= 4, all maps)", true);
}

// 9. alpha respects chain surgery by an upper bound
void criterion9() {
  for (int n = 2; n <= 4; ++n)
    for (const auto& p : enumerate_bounded_posets(n, 4))
      for (const auto& m : enumerate_algebras(p))
        if (!check_auxiliary_claim(m)) {
          report(9, "alpha(C delta [0<u]) = alpha([alpha(C)<u])", false);
          return;
        }
  report(9, "alpha(C delta [0<u]) = alpha([alpha(C)<u]) for |A| <= 4", true);
}

// 10. interplay identities plus the difference-poset round-trip
void criterion10() {
  for (int n = 2; n <= 5; ++n)
    for (const auto& e : enumerate_effect_algebras(n)) {
      if (!lemma1_suite(e)) {
        report(10, "oplus/ominus identities and D-poset round-trip", false,
               "identity suite");
        return;
      }
      const auto d = ea_to_dposet(e);
      if (!check_dposet_axioms(d) || !(dposet_to_ea(d) == e)) {
        report(10, "oplus/ominus identities and D-poset round-trip", false,
               "round-trip");
        return;
      }
    }
  report(10, "oplus/ominus identities and D-poset round-trip for |E| <= 5",
         true);
}

// 11. twenty seeded single-entry corruptions, each caught with a witness
void criterion11() {
  std::mt19937_64 rng(0);
  std::vector<EffectAlgebra> eas;
  for (int n = 3; n <= 4; ++n)
    for (auto& e : enumerate_effect_algebras(n)) eas.push_back(std::move(e));
  std::vector<OrthomodularPoset> omps;
  for (int n = 2; n <= 5; ++n)
    for (auto& a : enumerate_omps(n)) omps.push_back(std::move(a));

  for (int trial = 0; trial < 20; ++trial) {
    if (trial % 2 == 0) {
      // break commutativity in one off-diagonal cell
      auto e = eas[rng() % eas.size()];
      int a = 0, b = 0;
      do {
        a = static_cast<int>(rng() % e.size());
        b = static_cast<int>(rng() % e.size());
      } while (a == b);
      int v;
      do {
        v = static_cast<int>(rng() % (e.size() + 1)) - 1;
      } while (v == e.oplus[a][b]);
      e.oplus[a][b] = v;
      const auto verdict = check_ea_axioms(e);
      if (verdict || verdict.witness.empty()) {
        report(11, "mutation sensitivity", false,
               "EA corruption escaped, trial " + std::to_string(trial));
        return;
      }
    } else {
      // repoint one complement entry
      auto l = omps[rng() % omps.size()];
      const int x = static_cast<int>(rng() % l.size());
      int y;
      do {
        y = static_cast<int>(rng() % l.size());
      } while (y == l.complement[x]);
      l.complement[x] = y;
      const auto verdict = check_omp_axioms(l);
      if (verdict || verdict.witness.empty()) {
        report(11, "mutation sensitivity", false,
               "OMP corruption escaped, trial " + std::to_string(trial));
        return;
      }
    }
  }
  report(11, "mutation sensitivity (20 corruptions, seed 0, all caught)",
         true);
}

// 12. CLI golden output plus green law commands
int run_cli(const std::string& args, std::string* captured = nullptr) {
  const std::string tmp = "acceptance_cli_output.tmp";
  const std::string cmd =
      std::string(KALMBACH_CLI_PATH) + " " + args + " > " + tmp + " 2>&1";
  const int status = std::system(cmd.c_str());
  if (captured) {
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    *captured = ss.str();
  }
  std::remove(tmp.c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

void criterion12() {
  const std::string fixtures = KALMBACH_FIXTURES_DIR;

  std::string produced;
  if (run_cli("extend " + fixtures + "/chain3.json", &produced) != 0) {
    report(12, "CLI golden tests", false, "extend exited nonzero");
    return;
  }
  std::ifstream golden_in(fixtures + "/k_chain3.json");
  std::stringstream golden;
  golden << golden_in.rdbuf();
  if (produced != golden.str()) {
    report(12, "CLI golden tests", false, "extend output differs from golden");
    return;
  }
  // the golden file really is K(3-chain), independently of the CLI
  const auto parsed = parse_omp(load_json_file(fixtures + "/k_chain3.json"));
  RawPoset raw;
  raw.elements = {"0", "a", "1"};
  raw.relation = {{"0", "a"}, {"a", "1"}};
  if (!(parsed == kalmbach_extend(validate_poset(raw)).omp) ||
      !check_omp_axioms(parsed)) {
    report(12, "CLI golden tests", false, "golden fixture is not K(3-chain)");
    return;
  }

  const std::vector<std::string> commands = {
      "laws monad --max-size 3",
      "laws adjunction --max-size 4",
      "laws algebra --max-size 4",
      "laws lemma1 --max-size 4",
      "roundtrip EG --max-size 5",
      "roundtrip GE --max-size 4",
      "roundtrip DP --max-size 5",
  };
  for (const auto& c : commands)
    if (run_cli(c) != 0) {
      report(12, "CLI golden tests", false, "'" + c + "' exited nonzero");
      return;
    }
  report(12, "CLI golden tests (byte-stable extend, green law commands)",
         true);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED"
                              : std::to_string(failures) + " CRITERIA FAILED")
            << "\n";
  return failures == 0 ? 0 : 1;
}
