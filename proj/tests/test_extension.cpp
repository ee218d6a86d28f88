#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kalmbach/extension.hpp"

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

}  // namespace

TEST_CASE("chain order rule on the 3-chain") {
  const auto p = chain(3);
  CHECK(kalmbach_leq(p, {}, {0, 2}));           // {} below everything
  CHECK(kalmbach_leq(p, {0, 1}, {0, 2}));       // [0<a] <= [0<1]
  CHECK(!kalmbach_leq(p, {0, 1}, {1, 2}));      // [0<a] vs [a<1]
  CHECK(!kalmbach_leq(p, {0, 2}, {0, 1}));
  CHECK(kalmbach_leq(p, {1, 2}, {1, 2}));
}

TEST_CASE("perp is symmetric difference with the bounds") {
  const auto p = chain(3);
  CHECK(kalmbach_perp(p, {}) == Chain{0, 2});
  CHECK(kalmbach_perp(p, {0, 2}) == Chain{});
  CHECK(kalmbach_perp(p, {0, 1}) == Chain{1, 2});
}

TEST_CASE("extension of the 2-chain") {
  const auto kp = kalmbach_extend(chain(2));
  CHECK(kp.chains.size() == 2);
  CHECK(kp.carrier().name(0) == "[]");
  CHECK(kp.carrier().name(1) == "[0<1]");
  CHECK(kp.omp.complement == std::vector<int>{1, 0});
}

TEST_CASE("extension of the 3-chain is the diamond") {
  const auto kp = kalmbach_extend(chain(3));
  REQUIRE(kp.chains.size() == 4);
  const auto& k = kp.carrier();
  CHECK(k.elements ==
        std::vector<std::string>{"[]", "[0<a]", "[0<1]", "[a<1]"});
  CHECK(k.bottom == 0);
  CHECK(k.top == 2);
  CHECK(!k.comparable(1, 3));  // [0<a] and [a<1] are the atoms
  CHECK(kp.omp.complement == std::vector<int>{2, 3, 0, 1});
}

TEST_CASE("extension of the diamond has six elements") {
  const auto kp = kalmbach_extend(diamond());
  CHECK(kp.chains.size() == 6);
  CHECK(check_omp_axioms(kp.omp));
}

TEST_CASE("functor on morphisms") {
  const auto p3 = chain(3);
  const auto p2 = chain(2);
  const auto kp3 = kalmbach_extend(p3);
  const auto kp2 = kalmbach_extend(p2);

  // identity lifts to the identity
  CHECK(kalmbach_map(identity_map(3), kp3, kp3) == identity_map(4));

  // a -> 1 sends [0<a] to [0<1] and [a<1] to {}
  const auto up = kalmbach_map({0, 1, 1}, kp3, kp2);
  CHECK(up[kp3.id({0, 1})] == kp2.id({0, 1}));
  CHECK(up[kp3.id({1, 2})] == kp2.id({}));
  // a -> 0 sends [0<a] to {}
  const auto down = kalmbach_map({0, 0, 1}, kp3, kp2);
  CHECK(down[kp3.id({0, 1})] == kp2.id({}));
}

TEST_CASE("functoriality on all composable pairs at small size") {
  std::vector<BoundedPoset> posets;
  for (int n = 2; n <= 4; ++n)
    for (auto& p : enumerate_bounded_posets(n)) posets.push_back(std::move(p));
  for (const auto& p : posets) {
    const auto kp = kalmbach_extend(p);
    CHECK(kalmbach_map(identity_map(p.size()), kp, kp) ==
          identity_map(static_cast<int>(kp.chains.size())));
  }
  for (const auto& p : posets)
    for (const auto& q : posets)
      for (const auto& r : posets) {
        const auto kp = kalmbach_extend(p);
        const auto kq = kalmbach_extend(q);
        const auto kr = kalmbach_extend(r);
        for (const auto& f : enumerate_morphisms(p, q))
          for (const auto& g : enumerate_morphisms(q, r))
            CHECK(kalmbach_map(compose(g, f), kp, kr) ==
                  compose(kalmbach_map(g, kq, kr), kalmbach_map(f, kp, kq)));
      }
}

TEST_CASE("unit eta") {
  const auto p = chain(3);
  const auto kp = kalmbach_extend(p);
  const auto eta = unit_eta(p, kp);
  CHECK(eta[0] == kp.id({}));
  CHECK(eta[1] == kp.id({0, 1}));
  CHECK(eta[2] == kp.id({0, 2}));
  CHECK(eta[2] == kp.carrier().top);
  CHECK(check_embedding(p, kp));
}

TEST_CASE("counit epsilon on the 2x2 Boolean algebra") {
  const auto kp = kalmbach_extend(chain(3));  // the diamond OMP, a' = b
  const auto& l = kp.omp;
  CHECK(counit_epsilon(l, {}) == l.carrier.bottom);
  // [0 < atom]: 0' ^ atom = atom
  CHECK(counit_epsilon(l, Chain{0, 1}) == 1);
  // [atom < 1]: atom' ^ 1 = the other atom
  CHECK(counit_epsilon(l, Chain{1, 2}) == 3);
  // the full chain [0 < atom < 1] has odd length and is not in K(U(L));
  // the 4-chain [{} < [0<a] < [0<1]] is not a chain (only 3 elements), so
  // evaluate the top instead
  CHECK(counit_epsilon(l, Chain{0, 2}) == l.carrier.top);
}

TEST_CASE("mu evaluates symmetric differences") {
  const auto p = chain(3);
  const auto kp = kalmbach_extend(p);
  CHECK(mu_of(kp, {}) == Chain{});
  // [[0<a] < [0<1]] -> {0,a} delta {0,1} = [a<1]
  const Chain x{kp.id({0, 1}), kp.id({0, 2})};
  CHECK(mu_of(kp, Chain{std::min(x[0], x[1]), std::max(x[0], x[1])}) ==
        Chain{1, 2});
  // unit instance: mu([{} < C]) = C
  for (size_t t = 1; t < kp.chains.size(); ++t)
    CHECK(mu_of(kp, Chain{0, static_cast<int>(t)}) == kp.chains[t]);
}

TEST_CASE("monad laws") {
  MonadLawStats stats;
  CHECK(check_monad_laws(chain(2), AssocMode::exhaustive));
  CHECK(check_monad_laws(chain(3), AssocMode::exhaustive, 0, 0, &stats));
  CHECK(stats.t_size == 4);
  CHECK(stats.t2_size == 6);
  for (const auto& p : enumerate_bounded_posets(4))
    CHECK(check_monad_laws(p, AssocMode::sampled, 0, 1000));
}

TEST_CASE("naturality of eta and mu") {
  std::vector<BoundedPoset> posets;
  for (int n = 2; n <= 4; ++n)
    for (auto& p : enumerate_bounded_posets(n)) posets.push_back(std::move(p));
  for (const auto& p : posets)
    for (const auto& q : posets)
      for (const auto& f : enumerate_morphisms(p, q))
        CHECK(check_naturality_eta(f, p, q));
  for (const auto& p : posets)
    for (const auto& q : posets) {
      if (p.size() > 3 || q.size() > 3) continue;
      for (const auto& f : enumerate_morphisms(p, q))
        CHECK(check_naturality_mu(f, p, q));
    }
}

TEST_CASE("naturality of epsilon on small OMP morphisms") {
  std::vector<OrthomodularPoset> omps;
  for (int n = 2; n <= 4; ++n)
    for (auto& a : enumerate_omps(n)) omps.push_back(std::move(a));
  for (const auto& l : omps)
    for (const auto& m : omps)
      for (const auto& g :
           enumerate_omp_morphisms(l, m, OmpMorphismRule::primary))
        CHECK(check_naturality_epsilon(g, l, m));
}

TEST_CASE("triangle identities at small size") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& p : enumerate_bounded_posets(n))
      CHECK(check_triangle_left(p));
  for (int n = 2; n <= 5; ++n)
    for (const auto& a : enumerate_omps(n)) CHECK(check_triangle_right(a));
}

TEST_CASE("embedding holds for every poset up to size 5") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& p : enumerate_bounded_posets(n)) {
      const auto kp = kalmbach_extend(p);
      CHECK(check_embedding(p, kp));
    }
}

TEST_CASE("lattice property") {
  CHECK(check_lattice_property(kalmbach_extend(chain(2))));
  CHECK(check_lattice_property(kalmbach_extend(chain(3))));
  CHECK(check_lattice_property(kalmbach_extend(diamond())));
  // every bounded poset on <= 5 elements is a lattice (a join failure
  // needs two incomparable minimal upper bounds), so the smallest
  // non-lattice is the 6-element bowtie: a,b < c,d
  RawPoset raw;
  raw.elements = {"0", "a", "b", "c", "d", "1"};
  raw.relation = {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"},
                  {"b", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}};
  const auto p = validate_poset(raw);
  CHECK(!is_lattice(p));
  CHECK_THROWS_AS(check_lattice_property(kalmbach_extend(p)),
                  BaseNotLattice);
}
