#include "kalmbach/extension.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace kalmbach {

int KalmbachPoset::id(const Chain& c) const {
  auto it = chain_index.find(c);
  if (it == chain_index.end())
    throw NotAChain("not an even chain of the base: " + chain_name(base, c));
  return it->second;
}

std::string chain_name(const BoundedPoset& base, const Chain& c) {
  if (c.empty()) return "[]";
  std::string s = "[";
  const auto ordered = chain_in_order(base, c);
  for (size_t i = 0; i < ordered.size(); ++i) {
    if (i) s += "<";
    s += base.name(ordered[i]);
  }
  return s + "]";
}

bool kalmbach_leq(const BoundedPoset& p, const Chain& c, const Chain& d) {
  const auto xs = chain_in_order(p, c);
  const auto ys = chain_in_order(p, d);
  for (size_t i = 0; i + 1 < xs.size(); i += 2) {
    bool sandwiched = false;
    for (size_t j = 0; j + 1 < ys.size() && !sandwiched; j += 2)
      sandwiched = p.leq[ys[j]][xs[i]] && p.lt(xs[i], xs[i + 1]) &&
                   p.leq[xs[i + 1]][ys[j + 1]];
    if (!sandwiched) return false;
  }
  return true;
}

Chain kalmbach_perp(const BoundedPoset& p, const Chain& c) {
  Chain bounds{p.bottom, p.top};
  std::sort(bounds.begin(), bounds.end());
  return symmetric_difference(c, bounds);
}

BoundedPoset kalmbach_order(const BoundedPoset& p,
                            const std::vector<Chain>& chains) {
  const int m = static_cast<int>(chains.size());
  BoundedPoset k;
  k.elements.reserve(m);
  for (const auto& c : chains) k.elements.push_back(chain_name(p, c));
  k.leq.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) k.leq[i][j] = kalmbach_leq(p, chains[i], chains[j]);

  Chain topc{p.bottom, p.top};
  std::sort(topc.begin(), topc.end());
  k.bottom = static_cast<int>(
      std::find(chains.begin(), chains.end(), Chain{}) - chains.begin());
  k.top = static_cast<int>(std::find(chains.begin(), chains.end(), topc) -
                           chains.begin());
  if (k.bottom == m || k.top == m)
    throw InternalInconsistency("chain list misses {} or [0<1]");
  // The chain-order rule is not assumed to be a partial order; verify.
  if (auto v = check_poset_invariants(k); !v)
    throw InternalInconsistency("chain order is not a bounded order: " +
                                v.witness);
  return k;
}

KalmbachPoset kalmbach_extend(const BoundedPoset& p) {
  KalmbachPoset kp;
  kp.base = p;
  kp.chains = all_chains(p, Parity::even);
  kp.omp.carrier = kalmbach_order(p, kp.chains);
  for (size_t i = 0; i < kp.chains.size(); ++i)
    kp.chain_index.emplace(kp.chains[i], static_cast<int>(i));

  kp.omp.complement.resize(kp.chains.size());
  for (size_t i = 0; i < kp.chains.size(); ++i)
    kp.omp.complement[i] = kp.id(kalmbach_perp(p, kp.chains[i]));

  if (auto v = check_omp_axioms(kp.omp); !v)
    throw InternalInconsistency("K(P) fails OMP axioms: " + v.witness);
  return kp;
}

Chain kalmbach_image(const BoundedPoset& q, const std::vector<int>& f,
                     const Chain& c) {
  std::set<int> toggles;
  for (int x : c) {
    auto [it, inserted] = toggles.insert(f[x]);
    if (!inserted) toggles.erase(it);
  }
  Chain out(toggles.begin(), toggles.end());
  if (!is_chain_set(q, out))
    throw NotAChain("image set is not a chain: " + chain_name(q, out));
  if (out.size() % 2 != 0)
    throw NotAChain("image chain has odd size");  // parity is preserved
  return out;
}

std::vector<int> kalmbach_map(const std::vector<int>& f,
                              const KalmbachPoset& kp,
                              const KalmbachPoset& kq) {
  std::vector<int> kf(kp.chains.size());
  for (size_t i = 0; i < kp.chains.size(); ++i)
    kf[i] = kq.id(kalmbach_image(kq.base, f, kp.chains[i]));
  if (auto v = check_omp_morphism(kf, kp.omp, kq.omp, OmpMorphismRule::primary);
      !v)
    throw InternalInconsistency("K(f) is not an OMP morphism: " + v.witness);
  return kf;
}

Chain eta_chain(const BoundedPoset& p, int a) {
  if (a == p.bottom) return {};
  Chain c{p.bottom, a};
  std::sort(c.begin(), c.end());
  return c;
}

std::vector<int> unit_eta(const BoundedPoset& p, const KalmbachPoset& kp) {
  std::vector<int> eta(p.size());
  for (int a = 0; a < p.size(); ++a) eta[a] = kp.id(eta_chain(p, a));
  return eta;
}

int counit_epsilon(const OrthomodularPoset& l, const Chain& c) {
  const auto& p = l.carrier;
  const auto xs = chain_in_order(p, c);
  int acc = p.bottom;  // empty join
  for (size_t i = 0; i + 1 < xs.size(); i += 2) {
    const int a = xs[i], b = xs[i + 1];
    auto m = meet_of(p, l.complement[a], b);
    if (!m)
      throw MissingMeet("no meet of " + p.name(l.complement[a]) + " and " +
                        p.name(b));
    if (!p.leq[acc][l.complement[*m]])
      throw NotOrthogonal(p.name(acc) + " not orthogonal to " + p.name(*m));
    auto j = join_of(p, acc, *m);
    if (!j)
      throw MissingJoin("no join of " + p.name(acc) + " and " + p.name(*m));
    acc = *j;
  }
  return acc;
}

Chain mu_of(const KalmbachPoset& kp, const Chain& chain_of_chains) {
  Chain acc;
  for (int i : chain_of_chains) acc = symmetric_difference(acc, kp.chains[i]);
  if (!is_chain_set(kp.base, acc) || acc.size() % 2 != 0)
    throw NotAChain("mu image is not an even chain: " +
                    chain_name(kp.base, acc));
  return acc;
}

namespace {

// K(g) of an element of K, computed on chain indices of ka: toggles the
// images and requires the result to be a chain of kb's carrier.
Chain toggle_indices(const std::vector<int>& g, const Chain& c) {
  std::set<int> toggles;
  for (int x : c) {
    auto [it, inserted] = toggles.insert(g[x]);
    if (!inserted) toggles.erase(it);
  }
  return Chain(toggles.begin(), toggles.end());
}

}  // namespace

Verdict check_unit_laws(const BoundedPoset& p, const KalmbachPoset& kp) {
  const auto eta = unit_eta(p, kp);
  const int empty_id = kp.id(Chain{});
  for (size_t t = 0; t < kp.chains.size(); ++t) {
    const Chain& c = kp.chains[t];
    // mu after eta_{T(P)}
    Chain via_eta_t = c.empty() ? Chain{} : Chain{};
    if (!c.empty()) {
      via_eta_t = Chain{empty_id, static_cast<int>(t)};
      std::sort(via_eta_t.begin(), via_eta_t.end());
    }
    if (mu_of(kp, via_eta_t) != c)
      return Verdict::fail("mu . etaT != id at " + chain_name(p, c));
    // mu after T(eta_P)
    Chain lifted = toggle_indices(eta, c);
    if (lifted.size() != c.size() || !is_chain_set(kp.carrier(), lifted))
      return Verdict::fail("K(eta) image not a chain at " + chain_name(p, c));
    if (mu_of(kp, lifted) != c)
      return Verdict::fail("mu . T(eta) != id at " + chain_name(p, c));
  }
  return Verdict::pass();
}

Verdict check_assoc_law(const BoundedPoset& p, const KalmbachPoset& kp,
                        AssocMode mode, std::uint64_t seed,
                        std::size_t samples, MonadLawStats* stats) {
  const auto t2chains = all_chains(kp.carrier(), Parity::even);
  const BoundedPoset t2poset = kalmbach_order(kp.carrier(), t2chains);
  if (stats) {
    stats->t_size = kp.chains.size();
    stats->t2_size = t2chains.size();
  }

  auto check_one = [&](const Chain& x) -> Verdict {
    // x is an even chain of t2poset: a T^3(P) element.
    // route 1: mu_P . T(mu_P)
    std::set<int> toggles;
    for (int d : x) {
      const int u = kp.id(mu_of(kp, t2chains[d]));
      auto [it, inserted] = toggles.insert(u);
      if (!inserted) toggles.erase(it);
    }
    Chain s1(toggles.begin(), toggles.end());
    if (s1.size() != x.size() || !is_chain_set(kp.carrier(), s1))
      return Verdict::fail("T(mu) image not a chain at T^3 element");
    const Chain r1 = mu_of(kp, s1);
    // route 2: mu_P . mu_{T(P)}
    Chain s2;
    for (int d : x) s2 = symmetric_difference(s2, t2chains[d]);
    if (!is_chain_set(kp.carrier(), s2) || s2.size() % 2 != 0)
      return Verdict::fail("mu_T image not an even chain at T^3 element");
    const Chain r2 = mu_of(kp, s2);
    if (r1 != r2)
      return Verdict::fail("associativity fails: " + chain_name(p, r1) +
                           " vs " + chain_name(p, r2));
    return Verdict::pass();
  };

  if (mode == AssocMode::exhaustive) {
    const auto t3 = all_chains(t2poset, Parity::even);
    if (stats) stats->assoc_checked = t3.size();
    for (const auto& x : t3)
      if (auto v = check_one(x); !v) return v;
    return Verdict::pass();
  }

  std::mt19937_64 rng(seed);
  const int m = t2poset.size();
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  if (stats) stats->assoc_checked = samples;
  for (std::size_t s = 0; s < samples; ++s) {
    // random even chain of t2poset: greedy random chain, then a random
    // even-size subset of it
    std::shuffle(order.begin(), order.end(), rng);
    Chain chain;
    for (int i : order) {
      bool fits = true;
      for (int c : chain) fits = fits && t2poset.comparable(c, i);
      if (fits) chain.push_back(i);
    }
    std::shuffle(chain.begin(), chain.end(), rng);
    std::size_t keep = 2 * (rng() % (chain.size() / 2 + 1));
    chain.resize(keep);
    std::sort(chain.begin(), chain.end());
    if (auto v = check_one(chain); !v) return v;
  }
  return Verdict::pass();
}

Verdict check_monad_laws(const BoundedPoset& p, AssocMode mode,
                         std::uint64_t seed, std::size_t samples,
                         MonadLawStats* stats) {
  const auto kp = kalmbach_extend(p);
  if (auto v = check_unit_laws(p, kp); !v) return v;
  return check_assoc_law(p, kp, mode, seed, samples, stats);
}

Verdict check_naturality_eta(const std::vector<int>& f, const BoundedPoset& p,
                             const BoundedPoset& q) {
  for (int a = 0; a < p.size(); ++a) {
    const Chain lhs = kalmbach_image(q, f, eta_chain(p, a));
    const Chain rhs = eta_chain(q, f[a]);
    if (lhs != rhs)
      return Verdict::fail("eta square fails at " + p.name(a) + ": " +
                           chain_name(q, lhs) + " vs " + chain_name(q, rhs));
  }
  return Verdict::pass();
}

Verdict check_naturality_mu(const std::vector<int>& f, const BoundedPoset& p,
                            const BoundedPoset& q) {
  const auto kp = kalmbach_extend(p);
  const auto kq = kalmbach_extend(q);
  const auto kf = kalmbach_map(f, kp, kq);
  const auto t2chains = all_chains(kp.carrier(), Parity::even);
  for (const auto& x : t2chains) {
    const Chain lhs = kalmbach_image(q, f, mu_of(kp, x));
    const Chain lifted = toggle_indices(kf, x);
    if (!is_chain_set(kq.carrier(), lifted) || lifted.size() % 2 != 0)
      return Verdict::fail("KK(f) image not an even chain");
    const Chain rhs = mu_of(kq, lifted);
    if (lhs != rhs)
      return Verdict::fail("mu square fails at a T^2 element: " +
                           chain_name(q, lhs) + " vs " + chain_name(q, rhs));
  }
  return Verdict::pass();
}

Verdict check_naturality_epsilon(const std::vector<int>& g,
                                 const OrthomodularPoset& l,
                                 const OrthomodularPoset& m) {
  for (const auto& c : all_chains(l.carrier, Parity::even)) {
    const int lhs = g[counit_epsilon(l, c)];
    const int rhs = counit_epsilon(m, kalmbach_image(m.carrier, g, c));
    if (lhs != rhs)
      return Verdict::fail("epsilon square fails at " +
                           chain_name(l.carrier, c));
  }
  return Verdict::pass();
}

Verdict check_triangle_left(const BoundedPoset& p) {
  const auto kp = kalmbach_extend(p);
  const auto eta = unit_eta(p, kp);
  for (size_t i = 0; i < kp.chains.size(); ++i) {
    const Chain lifted = toggle_indices(eta, kp.chains[i]);
    if (!is_chain_set(kp.carrier(), lifted) ||
        lifted.size() != kp.chains[i].size())
      return Verdict::fail("K(eta) image not a chain at " +
                           chain_name(p, kp.chains[i]));
    const int back = counit_epsilon(kp.omp, lifted);
    if (back != static_cast<int>(i))
      return Verdict::fail("left triangle fails at " +
                           chain_name(p, kp.chains[i]));
  }
  return Verdict::pass();
}

Verdict check_triangle_right(const OrthomodularPoset& l) {
  for (int x = 0; x < l.size(); ++x)
    if (counit_epsilon(l, eta_chain(l.carrier, x)) != x)
      return Verdict::fail("right triangle fails at " + l.carrier.name(x));
  return Verdict::pass();
}

Verdict check_embedding(const BoundedPoset& p, const KalmbachPoset& kp) {
  const auto eta = unit_eta(p, kp);
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      if (a != b && eta[a] == eta[b])
        return Verdict::fail("eta not injective at (" + p.name(a) + "," +
                             p.name(b) + ")");
      if (p.leq[a][b] != kp.carrier().leq[eta[a]][eta[b]])
        return Verdict::fail("eta not order-reflecting at (" + p.name(a) +
                             "," + p.name(b) + ")");
    }
  return Verdict::pass();
}

Verdict check_lattice_property(const KalmbachPoset& kp) {
  if (!is_lattice(kp.base))
    throw BaseNotLattice("base poset is not a lattice");
  const auto& k = kp.carrier();
  for (int a = 0; a < k.size(); ++a)
    for (int b = 0; b < k.size(); ++b) {
      if (!join_of(k, a, b))
        return Verdict::fail("missing join of " + k.name(a) + " and " +
                             k.name(b));
      if (!meet_of(k, a, b))
        return Verdict::fail("missing meet of " + k.name(a) + " and " +
                             k.name(b));
    }
  return Verdict::pass();
}

}  // namespace kalmbach
