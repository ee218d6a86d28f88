#pragma once

#include <cstdint>
#include <map>

#include "kalmbach/omp.hpp"
#include "kalmbach/poset.hpp"

namespace kalmbach {

// K(P): the orthomodular poset of even chains of P. Element i of the
// carrier is chains[i]; chains are in lexicographic order, {} first.
struct KalmbachPoset {
  BoundedPoset base;
  std::vector<Chain> chains;
  OrthomodularPoset omp;
  std::map<Chain, int> chain_index;

  const BoundedPoset& carrier() const { return omp.carrier; }
  int id(const Chain& c) const;  // throws NotAChain on miss
};

std::string chain_name(const BoundedPoset& base, const Chain& c);

// C <= D iff every consecutive pair of C (in poset order) is sandwiched
// inside some consecutive pair of D.
bool kalmbach_leq(const BoundedPoset& p, const Chain& c, const Chain& d);
// C -> C symdiff {bottom, top}.
Chain kalmbach_perp(const BoundedPoset& p, const Chain& c);

// Just the order on the given chain list; partial-order axioms verified.
BoundedPoset kalmbach_order(const BoundedPoset& p,
                            const std::vector<Chain>& chains);
// Full construction; result verified against the OMP axioms.
KalmbachPoset kalmbach_extend(const BoundedPoset& p);

// K on morphisms, pointwise: the symmetric difference of image singletons.
// Throws NotAChain when the image set is not a chain of q.
Chain kalmbach_image(const BoundedPoset& q, const std::vector<int>& f,
                     const Chain& c);
// Table form of K(f) : K(P) -> K(Q); verified to be an OMP morphism.
std::vector<int> kalmbach_map(const std::vector<int>& f,
                              const KalmbachPoset& kp,
                              const KalmbachPoset& kq);

Chain eta_chain(const BoundedPoset& p, int a);  // a -> [0<a], 0 -> {}
std::vector<int> unit_eta(const BoundedPoset& p, const KalmbachPoset& kp);

// epsilon_L([x1<...<x2n]) = (x1' ^ x2) v ... v (x2n-1' ^ x2n), folded
// left to right. Throws MissingJoin / MissingMeet / NotOrthogonal.
int counit_epsilon(const OrthomodularPoset& l, const Chain& c);

// mu on an element of T^2(P) given as a chain of kp chain indices.
Chain mu_of(const KalmbachPoset& kp, const Chain& chain_of_chains);

enum class AssocMode { exhaustive, sampled };

struct MonadLawStats {
  std::size_t t_size = 0;
  std::size_t t2_size = 0;
  std::size_t assoc_checked = 0;
};

Verdict check_unit_laws(const BoundedPoset& p, const KalmbachPoset& kp);
Verdict check_assoc_law(const BoundedPoset& p, const KalmbachPoset& kp,
                        AssocMode mode, std::uint64_t seed,
                        std::size_t samples, MonadLawStats* stats = nullptr);
Verdict check_monad_laws(const BoundedPoset& p, AssocMode mode,
                         std::uint64_t seed = 0, std::size_t samples = 1000,
                         MonadLawStats* stats = nullptr);

Verdict check_naturality_eta(const std::vector<int>& f, const BoundedPoset& p,
                             const BoundedPoset& q);
Verdict check_naturality_mu(const std::vector<int>& f, const BoundedPoset& p,
                            const BoundedPoset& q);
Verdict check_naturality_epsilon(const std::vector<int>& g,
                                 const OrthomodularPoset& l,
                                 const OrthomodularPoset& m);

// epsilon_{K(P)} after K(eta_P) = id on K(P)
Verdict check_triangle_left(const BoundedPoset& p);
// U(epsilon_L) after eta_{U(L)} = id on U(L)
Verdict check_triangle_right(const OrthomodularPoset& l);

// eta injective and order-reflecting
Verdict check_embedding(const BoundedPoset& p, const KalmbachPoset& kp);

// Every pair of K(P) has a join and a meet. Throws BaseNotLattice when the
// base poset is not itself a lattice.
Verdict check_lattice_property(const KalmbachPoset& kp);

}  // namespace kalmbach
