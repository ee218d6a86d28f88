#pragma once

#include <string>
#include <vector>

#include "kalmbach/poset.hpp"

namespace kalmbach {

// Finite partial commutative monoid candidate. Partiality is an explicit
// UNDEFINED marker in a total n x n table.
struct EffectAlgebra {
  static constexpr int UNDEFINED = -1;

  std::vector<std::string> elements;
  std::vector<std::vector<int>> oplus;
  int zero = 0;
  int one = 0;

  int size() const { return static_cast<int>(elements.size()); }
  bool defined(int a, int b) const { return oplus[a][b] >= 0; }
  int sum(int a, int b) const { return oplus[a][b]; }
  const std::string& name(int i) const { return elements[i]; }

  bool operator==(const EffectAlgebra&) const = default;
};

struct DPoset {
  BoundedPoset carrier;
  std::vector<std::vector<int>> ominus;  // ominus[b][a] = b - a, -1 undefined

  bool operator==(const DPoset&) const = default;
};

// Axioms E1-E4, first violation reported.
Verdict check_ea_axioms(const EffectAlgebra& e);

// The unique a' with a + a' = 1. Throws NonUniqueWitness when E3 fails.
int orthosupplement(const EffectAlgebra& e, int a);

// a <= b iff some c has a + c = b.
bool ea_leq(const EffectAlgebra& e, int a, int b);
BoundedPoset derived_order(const EffectAlgebra& e);  // throws NotAPartialOrder
// The unique c with a + c = b. Throws UndefinedDifference / NonUniqueWitness.
int derived_ominus(const EffectAlgebra& e, int b, int a);

Verdict check_dposet_axioms(const DPoset& d);
DPoset ea_to_dposet(const EffectAlgebra& e);
EffectAlgebra dposet_to_ea(const DPoset& d);

Verdict check_ea_morphism(const std::vector<int>& f, const EffectAlgebra& a,
                          const EffectAlgebra& b);

// The four classical oplus/ominus/' interplay identities, checked over all
// pairs and triples.
Verdict lemma1_suite(const EffectAlgebra& e);

// All labeled oplus tables on n elements with element 0 = zero and
// element n-1 = one that pass check_ea_axioms.
std::vector<EffectAlgebra> enumerate_effect_algebras(int n, int cap = 5);
std::vector<std::vector<int>> enumerate_ea_morphisms(const EffectAlgebra& a,
                                                     const EffectAlgebra& b);

}  // namespace kalmbach
