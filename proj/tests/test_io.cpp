#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kalmbach/io.hpp"

using namespace kalmbach;

namespace {

BoundedPoset chain(int n) {
  RawPoset raw;
  raw.elements.push_back("0");
  for (int i = 0; i < n - 2; ++i) raw.elements.emplace_back(1, char('a' + i));
  raw.elements.push_back("1");
  for (int i = 0; i + 1 < n; ++i)
    raw.relation.emplace_back(raw.elements[i], raw.elements[i + 1]);
  return validate_poset(raw);
}

BoundedPoset diamond() {
  RawPoset raw;
  raw.elements = {"0", "a", "b", "1"};
  raw.relation = {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}};
  return validate_poset(raw);
}

EffectAlgebra lukasiewicz4() {
  EffectAlgebra e;
  e.elements = {"0", "1/3", "2/3", "1"};
  e.zero = 0;
  e.one = 3;
  e.oplus.assign(4, std::vector<int>(4, EffectAlgebra::UNDEFINED));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (a + b <= 3) e.oplus[a][b] = a + b;
  return e;
}

}  // namespace

TEST_CASE("poset JSON round-trip") {
  for (const auto& p : {chain(2), chain(4), diamond()})
    CHECK(parse_poset(serialize_poset(p)) == p);
}

TEST_CASE("poset serialization content") {
  const auto j = serialize_poset(chain(3));
  CHECK(j["elements"] == json::array({"0", "a", "1"}));
  CHECK(j["relation"] ==
        json::array({json::array({"0", "a"}), json::array({"a", "1"})}));
  CHECK(j["mode"] == "cover");
  CHECK(j["bottom"] == "0");
  CHECK(j["top"] == "1");
}

TEST_CASE("poset parse errors") {
  CHECK_THROWS_AS(parse_poset(json::parse(R"({"relation": []})")), ParseError);
  CHECK_THROWS_AS(
      parse_poset(json::parse(R"({"elements": ["0","1"], "relation": 3})")),
      ParseError);
  CHECK_THROWS_AS(parse_poset(json::parse(
                      R"({"elements": ["0","1"], "relation": [["0","1"]],
                          "mode": "closed"})")),
                  ParseError);
  CHECK_THROWS_AS(parse_poset(json::parse(
                      R"({"elements": ["0","1"], "relation": [["0"]]})")),
                  ParseError);
  // validation errors pass through
  CHECK_THROWS_AS(parse_poset(json::parse(
                      R"({"elements": ["0","1"],
                          "relation": [["0","1"],["1","0"]]})")),
                  CycleDetected);
}

TEST_CASE("effect algebra JSON round-trip") {
  const auto e = lukasiewicz4();
  CHECK(parse_ea(serialize_ea(e)) == e);
  for (const auto& x : enumerate_effect_algebras(4))
    CHECK(parse_ea(serialize_ea(x)) == x);
}

TEST_CASE("effect algebra parse errors") {
  CHECK_THROWS_AS(parse_ea(json::parse(
                      R"({"elements": ["0","1"], "oplus": [["0","1"]],
                          "zero": "0", "one": "1"})")),
                  ParseError);
  CHECK_THROWS_AS(parse_ea(json::parse(
                      R"({"elements": ["0","1"],
                          "oplus": [["0","0","0"],["0","0","1"]],
                          "zero": "0", "one": "1"})")),
                  ParseError);
  CHECK_THROWS_AS(parse_ea(json::parse(
                      R"({"elements": ["0","1"], "oplus": [],
                          "zero": "0"})")),
                  ParseError);
  CHECK_THROWS_AS(parse_ea(json::parse(
                      R"({"elements": ["0","1"], "oplus": [["0","x","1"]],
                          "zero": "0", "one": "1"})")),
                  ParseError);
}

TEST_CASE("OMP JSON round-trip") {
  const OrthomodularPoset b22{diamond(), {3, 2, 1, 0}};
  CHECK(parse_omp(serialize_omp(b22)) == b22);
  for (int n = 2; n <= 5; ++n)
    for (const auto& a : enumerate_omps(n))
      CHECK(parse_omp(serialize_omp(a)) == a);
}

TEST_CASE("OMP parse errors") {
  auto j = serialize_omp({diamond(), {3, 2, 1, 0}});
  j.erase("complement");
  CHECK_THROWS_AS(parse_omp(j), ParseError);
  j["complement"] = json::object({{"0", "1"}});  // not total
  CHECK_THROWS_AS(parse_omp(j), ParseError);
}

TEST_CASE("algebra JSON round-trip") {
  for (const auto& p : {chain(2), chain(3), diamond()})
    for (const auto& m : enumerate_algebras(p))
      CHECK(parse_algebra(serialize_algebra(m)) == m);
}

TEST_CASE("algebra serialization content") {
  const auto algebras = enumerate_algebras(chain(2));
  REQUIRE(algebras.size() == 1);
  const auto j = serialize_algebra(algebras[0]);
  CHECK(j["alpha"] == json::array({json::array({"[]", "0"}),
                                   json::array({"[0<1]", "1"})}));
}

TEST_CASE("algebra parse errors") {
  const auto algebras = enumerate_algebras(chain(3));
  REQUIRE(!algebras.empty());
  auto j = serialize_algebra(algebras[0]);
  auto partial = j;
  partial["alpha"].erase(1);
  CHECK_THROWS_AS(parse_algebra(partial), ParseError);
  auto bad_name = j;
  bad_name["alpha"][1][0] = "[x<1]";  // unknown element
  CHECK_THROWS_AS(parse_algebra(bad_name), ParseError);
  // {a, b} is not a chain of the diamond
  const auto dm = enumerate_algebras(diamond());
  REQUIRE(!dm.empty());
  auto bad_chain = serialize_algebra(dm[0]);
  bad_chain["alpha"][1][0] = "[a<b]";
  CHECK_THROWS_AS(parse_algebra(bad_chain), NotAChain);
}

TEST_CASE("load_json_file") {
  CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), ParseError);
}

TEST_CASE("DOT output for the 3-chain") {
  const std::string expected =
      "digraph hasse {\n"
      "  rankdir=BT;\n"
      "  \"0\";\n"
      "  \"a\";\n"
      "  \"1\";\n"
      "  \"0\" -> \"a\";\n"
      "  \"a\" -> \"1\";\n"
      "}\n";
  CHECK(dot_poset(chain(3)) == expected);
}

TEST_CASE("DOT output annotates complements") {
  const OrthomodularPoset b22{diamond(), {3, 2, 1, 0}};
  const auto dot = dot_omp(b22);
  CHECK(dot.find("\"a\" [label=\"a\\n' = b\"];") != std::string::npos);
  CHECK(dot.find("\"0\" -> \"a\";") != std::string::npos);
}
