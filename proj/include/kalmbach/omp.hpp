#pragma once

#include "kalmbach/effect_algebra.hpp"
#include "kalmbach/poset.hpp"

namespace kalmbach {

struct OrthomodularPoset {
  BoundedPoset carrier;
  std::vector<int> complement;  // x -> x'

  int size() const { return carrier.size(); }
  bool operator==(const OrthomodularPoset&) const = default;
};

enum class OmpMorphismRule { primary, alternative };

Verdict check_omp_axioms(const OrthomodularPoset& a);

// primary: f(1)=1 and a <= b' implies f(a) <= f(b)' and f(a v b) = f(a) v f(b).
// alternative: order preserving, complement preserving, orthogonal-join
// preserving.
Verdict check_omp_morphism(const std::vector<int>& f,
                           const OrthomodularPoset& a,
                           const OrthomodularPoset& b, OmpMorphismRule rule);

// x + y = x v y when x <= y', undefined otherwise. Throws JoinMissing.
EffectAlgebra omp_to_ea(const OrthomodularPoset& a);

// All orthomodular posets on n labeled elements (complement-map search over
// enumerate_bounded_posets).
std::vector<OrthomodularPoset> enumerate_omps(int n, int cap = 5);
std::vector<std::vector<int>> enumerate_omp_morphisms(
    const OrthomodularPoset& a, const OrthomodularPoset& b,
    OmpMorphismRule rule);

}  // namespace kalmbach
