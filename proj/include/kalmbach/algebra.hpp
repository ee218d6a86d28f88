#pragma once

#include "kalmbach/effect_algebra.hpp"
#include "kalmbach/extension.hpp"

namespace kalmbach {

// Candidate algebra for the chain monad: a carrier plus a total map from
// its even chains to the carrier. alpha[i] is the value on the i-th chain
// of kalmbach_extend(carrier), in canonical chain order.
struct MonadAlgebra {
  BoundedPoset carrier;
  std::vector<int> alpha;

  bool operator==(const MonadAlgebra&) const = default;
};

Verdict check_algebra_laws(const MonadAlgebra& m);
// Variant reusing a prebuilt extension and T^2 chain list (enumeration path).
Verdict check_algebra_laws(const MonadAlgebra& m, const KalmbachPoset& kp,
                           const std::vector<Chain>& t2chains);

// G on objects: alpha = the alternating ominus/oplus fold of the chain.
MonadAlgebra structure_map(const EffectAlgebra& a);

// E on objects: b - a := alpha([a<b]), then through the D-poset
// presentation. Throws DAxiomFailure when (D1)-(D3) fail.
EffectAlgebra ea_from_algebra(const MonadAlgebra& m);

// alpha(C symdiff [0<u]) = alpha([alpha(C)<u]) for every strict upper
// bound u of C outside C.
Verdict check_auxiliary_claim(const MonadAlgebra& m);

// For an EA morphism f : A -> B, U(f) commutes with the structure maps:
// the alternating sum of image differences equals m_B of the image chain.
Verdict check_g_morphism_equation(const std::vector<int>& f,
                                  const EffectAlgebra& a,
                                  const EffectAlgebra& b);

Verdict check_algebra_morphism(const std::vector<int>& h,
                               const MonadAlgebra& m1, const MonadAlgebra& m2);

Verdict roundtrip_eg(const EffectAlgebra& a);  // E(G(A)) structurally == A
Verdict roundtrip_ge(const MonadAlgebra& m);   // G(E(M)) structurally == M

std::vector<MonadAlgebra> enumerate_algebras(const BoundedPoset& a,
                                             int cap = 4);

}  // namespace kalmbach
