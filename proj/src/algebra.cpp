#include "kalmbach/algebra.hpp"

#include <algorithm>
#include <set>

namespace kalmbach {

namespace {

// (x2 - x1) + (x4 - x3) + ..., folded left to right with per-step
// definedness asserts.
int alternating_sum(const EffectAlgebra& e, const BoundedPoset& order,
                    const Chain& c) {
  const auto xs = chain_in_order(order, c);
  int acc = e.zero;
  for (size_t i = 0; i + 1 < xs.size(); i += 2) {
    const int d = derived_ominus(e, xs[i + 1], xs[i]);
    if (!e.defined(acc, d))
      throw UndefinedSum("fold step undefined: " + e.name(acc) + " + " +
                         e.name(d));
    acc = e.sum(acc, d);
  }
  return acc;
}

Chain sorted_pair(int a, int b) {
  Chain c{a, b};
  std::sort(c.begin(), c.end());
  return c;
}

}  // namespace

Verdict check_algebra_laws(const MonadAlgebra& m, const KalmbachPoset& kp,
                           const std::vector<Chain>& t2chains) {
  const auto& a = m.carrier;
  if (m.alpha.size() != kp.chains.size())
    return Verdict::fail("alpha not total on T(A)");
  if (auto v = is_morphism(m.alpha, kp.carrier(), a); !v)
    return Verdict::fail("alpha not a bounded-poset morphism: " + v.witness);

  for (int x = 0; x < a.size(); ++x)
    if (m.alpha[kp.id(eta_chain(a, x))] != x)
      return Verdict::fail("triangle law fails at " + a.name(x));

  for (const auto& cc : t2chains) {
    // alpha . T(alpha) versus alpha . mu
    std::set<int> toggles;
    for (int d : cc) {
      auto [it, inserted] = toggles.insert(m.alpha[d]);
      if (!inserted) toggles.erase(it);
    }
    Chain lifted(toggles.begin(), toggles.end());
    if (lifted.size() != cc.size() || !is_chain_set(a, lifted))
      return Verdict::fail("T(alpha) image not a chain at " +
                           chain_name(kp.carrier(), cc));
    const int lhs = m.alpha[kp.id(lifted)];
    const int rhs = m.alpha[kp.id(mu_of(kp, cc))];
    if (lhs != rhs)
      return Verdict::fail("square law fails at " +
                           chain_name(kp.carrier(), cc) + ": " + a.name(lhs) +
                           " vs " + a.name(rhs));
  }
  return Verdict::pass();
}

Verdict check_algebra_laws(const MonadAlgebra& m) {
  const auto kp = kalmbach_extend(m.carrier);
  return check_algebra_laws(m, kp, all_chains(kp.carrier(), Parity::even));
}

MonadAlgebra structure_map(const EffectAlgebra& a) {
  MonadAlgebra m;
  m.carrier = derived_order(a);
  const auto kp = kalmbach_extend(m.carrier);
  m.alpha.reserve(kp.chains.size());
  for (const auto& c : kp.chains)
    m.alpha.push_back(alternating_sum(a, m.carrier, c));
  return m;
}

EffectAlgebra ea_from_algebra(const MonadAlgebra& m) {
  const auto& a = m.carrier;
  const auto kp = kalmbach_extend(a);
  DPoset d;
  d.carrier = a;
  d.ominus.assign(a.size(), std::vector<int>(a.size(), -1));
  for (int b = 0; b < a.size(); ++b)
    for (int x = 0; x < a.size(); ++x) {
      if (!a.leq[x][b]) continue;
      d.ominus[b][x] = (x == b) ? a.bottom : m.alpha[kp.id(sorted_pair(x, b))];
    }
  if (auto v = check_dposet_axioms(d); !v)
    throw DAxiomFailure("derived difference fails D axioms: " + v.witness);
  return dposet_to_ea(d);
}

Verdict check_auxiliary_claim(const MonadAlgebra& m) {
  const auto& a = m.carrier;
  const auto kp = kalmbach_extend(a);
  for (size_t i = 0; i < kp.chains.size(); ++i) {
    const Chain& c = kp.chains[i];
    for (int u = 0; u < a.size(); ++u) {
      if (u == a.bottom) continue;
      if (std::find(c.begin(), c.end(), u) != c.end()) continue;
      bool upper = true;
      for (int x : c) upper = upper && a.leq[x][u];
      if (!upper) continue;
      const Chain lhs_chain =
          symmetric_difference(c, sorted_pair(a.bottom, u));
      const int lhs = m.alpha[kp.id(lhs_chain)];
      const int ac = m.alpha[i];
      if (!a.lt(ac, u))
        return Verdict::fail("alpha(C) not below " + a.name(u) + " at " +
                             chain_name(a, c));
      const int rhs = m.alpha[kp.id(sorted_pair(ac, u))];
      if (lhs != rhs)
        return Verdict::fail("auxiliary claim fails at C=" + chain_name(a, c) +
                             ", u=" + a.name(u));
    }
  }
  return Verdict::pass();
}

Verdict check_g_morphism_equation(const std::vector<int>& f,
                                  const EffectAlgebra& a,
                                  const EffectAlgebra& b) {
  const auto orda = derived_order(a);
  const auto ordb = derived_order(b);
  for (const auto& c : all_chains(orda, Parity::even)) {
    const auto xs = chain_in_order(orda, c);
    int lhs = b.zero;
    for (size_t i = 0; i + 1 < xs.size(); i += 2) {
      if (!ordb.leq[f[xs[i]]][f[xs[i + 1]]])
        return Verdict::fail("image difference undefined at " +
                             chain_name(orda, c));
      const int d = derived_ominus(b, f[xs[i + 1]], f[xs[i]]);
      if (!b.defined(lhs, d))
        return Verdict::fail("image fold undefined at " + chain_name(orda, c));
      lhs = b.sum(lhs, d);
    }
    const Chain img = kalmbach_image(ordb, f, c);
    const int rhs = alternating_sum(b, ordb, img);
    if (lhs != rhs)
      return Verdict::fail("structure maps disagree at " +
                           chain_name(orda, c) + ": " + b.name(lhs) + " vs " +
                           b.name(rhs));
  }
  return Verdict::pass();
}

Verdict check_algebra_morphism(const std::vector<int>& h,
                               const MonadAlgebra& m1,
                               const MonadAlgebra& m2) {
  if (auto v = is_morphism(h, m1.carrier, m2.carrier); !v) return v;
  const auto kp1 = kalmbach_extend(m1.carrier);
  const auto kp2 = kalmbach_extend(m2.carrier);
  for (size_t i = 0; i < kp1.chains.size(); ++i) {
    Chain img;
    try {
      img = kalmbach_image(m2.carrier, h, kp1.chains[i]);
    } catch (const NotAChain&) {
      return Verdict::fail("T(h) image not a chain at " +
                           chain_name(m1.carrier, kp1.chains[i]));
    }
    if (h[m1.alpha[i]] != m2.alpha[kp2.id(img)])
      return Verdict::fail("does not commute with structure maps at " +
                           chain_name(m1.carrier, kp1.chains[i]));
  }
  return Verdict::pass();
}

Verdict roundtrip_eg(const EffectAlgebra& a) {
  const EffectAlgebra back = ea_from_algebra(structure_map(a));
  if (back.elements != a.elements) return Verdict::fail("element lists differ");
  if (back.zero != a.zero || back.one != a.one)
    return Verdict::fail("bounds differ");
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (back.oplus[x][y] != a.oplus[x][y])
        return Verdict::fail("sum tables differ at (" + a.name(x) + "," +
                             a.name(y) + ")");
  return Verdict::pass();
}

Verdict roundtrip_ge(const MonadAlgebra& m) {
  const MonadAlgebra back = structure_map(ea_from_algebra(m));
  if (back.carrier != m.carrier) return Verdict::fail("carriers differ");
  for (size_t i = 0; i < m.alpha.size(); ++i)
    if (back.alpha[i] != m.alpha[i])
      return Verdict::fail("alpha differs at chain index " +
                           std::to_string(i));
  return Verdict::pass();
}

std::vector<MonadAlgebra> enumerate_algebras(const BoundedPoset& a, int cap) {
  if (a.size() > cap)
    throw CapExceeded("carrier size " + std::to_string(a.size()) +
                      " above cap " + std::to_string(cap));
  const auto kp = kalmbach_extend(a);
  const auto t2chains = all_chains(kp.carrier(), Parity::even);

  // The triangle law pins alpha on {} and on every [0<x]; only the
  // remaining chains are searched.
  std::vector<int> alpha(kp.chains.size(), -1);
  std::vector<size_t> free_slots;
  for (size_t i = 0; i < kp.chains.size(); ++i) {
    const Chain& c = kp.chains[i];
    if (c.empty())
      alpha[i] = a.bottom;
    else if (c.size() == 2 &&
             std::find(c.begin(), c.end(), a.bottom) != c.end())
      alpha[i] = (c[0] == a.bottom) ? c[1] : c[0];
    else
      free_slots.push_back(i);
  }

  std::vector<MonadAlgebra> out;
  auto rec = [&](auto&& self, size_t k) -> void {
    if (k == free_slots.size()) {
      MonadAlgebra m{a, alpha};
      if (check_algebra_laws(m, kp, t2chains)) out.push_back(std::move(m));
      return;
    }
    for (int v = 0; v < a.size(); ++v) {
      alpha[free_slots[k]] = v;
      self(self, k + 1);
    }
    alpha[free_slots[k]] = -1;
  };
  rec(rec, 0);
  return out;
}

}  // namespace kalmbach
