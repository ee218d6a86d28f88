#include "kalmbach/omp.hpp"

namespace kalmbach {

Verdict check_omp_axioms(const OrthomodularPoset& a) {
  const auto& p = a.carrier;
  const int n = p.size();
  if (auto v = check_poset_invariants(p); !v) return v;
  if (static_cast<int>(a.complement.size()) != n)
    return Verdict::fail("complement not total");
  for (int x : a.complement)
    if (x < 0 || x >= n) return Verdict::fail("complement leaves carrier");

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.leq[x][y] && !p.leq[a.complement[y]][a.complement[x]])
        return Verdict::fail("complement not order-reversing at (" +
                             p.name(x) + "," + p.name(y) + ")");
  for (int x = 0; x < n; ++x)
    if (a.complement[a.complement[x]] != x)
      return Verdict::fail("complement not involutive at " + p.name(x));
  // x ^ x' = 0: the only common lower bound of x and x' is 0
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z)
      if (z != p.bottom && p.leq[z][x] && p.leq[z][a.complement[x]])
        return Verdict::fail("x ^ x' != 0 at " + p.name(x) + " (witness " +
                             p.name(z) + ")");
  // orthogonal joins exist
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.leq[x][a.complement[y]] && !join_of(p, x, y))
        return Verdict::fail("missing orthogonal join at (" + p.name(x) +
                             "," + p.name(y) + ")");
  // orthomodular law: x <= y implies x v (x v y')' = y
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!p.leq[x][y]) continue;
      auto j1 = join_of(p, x, a.complement[y]);
      if (!j1)
        return Verdict::fail("missing join x v y' at (" + p.name(x) + "," +
                             p.name(y) + ")");
      auto j2 = join_of(p, x, a.complement[*j1]);
      if (!j2 || *j2 != y)
        return Verdict::fail("orthomodular law fails at (" + p.name(x) + "," +
                             p.name(y) + ")");
    }
  return Verdict::pass();
}

Verdict check_omp_morphism(const std::vector<int>& f,
                           const OrthomodularPoset& a,
                           const OrthomodularPoset& b, OmpMorphismRule rule) {
  const auto& p = a.carrier;
  const auto& q = b.carrier;
  if (static_cast<int>(f.size()) != p.size())
    return Verdict::fail("map not total on source");
  for (int v : f)
    if (v < 0 || v >= q.size()) return Verdict::fail("map leaves target");

  if (rule == OmpMorphismRule::primary) {
    if (f[p.top] != q.top) return Verdict::fail("top not preserved");
    for (int x = 0; x < p.size(); ++x)
      for (int y = 0; y < p.size(); ++y) {
        if (!p.leq[x][a.complement[y]]) continue;
        if (!q.leq[f[x]][b.complement[f[y]]])
          return Verdict::fail("orthogonality not preserved at (" + p.name(x) +
                               "," + p.name(y) + ")");
        auto js = join_of(p, x, y);
        auto jt = join_of(q, f[x], f[y]);
        if (!js || !jt || f[*js] != *jt)
          return Verdict::fail("orthogonal join not preserved at (" +
                               p.name(x) + "," + p.name(y) + ")");
      }
    return Verdict::pass();
  }

  // alternative definition
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.leq[x][y] && !q.leq[f[x]][f[y]])
        return Verdict::fail("order not preserved at (" + p.name(x) + "," +
                             p.name(y) + ")");
  for (int x = 0; x < p.size(); ++x)
    if (f[a.complement[x]] != b.complement[f[x]])
      return Verdict::fail("complement not preserved at " + p.name(x));
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      if (!p.leq[x][a.complement[y]]) continue;
      auto js = join_of(p, x, y);
      auto jt = join_of(q, f[x], f[y]);
      if (!js || !jt || f[*js] != *jt)
        return Verdict::fail("orthogonal join not preserved at (" + p.name(x) +
                             "," + p.name(y) + ")");
    }
  return Verdict::pass();
}

EffectAlgebra omp_to_ea(const OrthomodularPoset& a) {
  const auto& p = a.carrier;
  const int n = p.size();
  EffectAlgebra e;
  e.elements = p.elements;
  e.zero = p.bottom;
  e.one = p.top;
  e.oplus.assign(n, std::vector<int>(n, EffectAlgebra::UNDEFINED));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!p.leq[x][a.complement[y]]) continue;
      auto j = join_of(p, x, y);
      if (!j)
        throw JoinMissing("no join of orthogonal pair (" + p.name(x) + "," +
                          p.name(y) + ")");
      e.oplus[x][y] = *j;
    }
  return e;
}

std::vector<OrthomodularPoset> enumerate_omps(int n, int cap) {
  std::vector<OrthomodularPoset> out;
  for (const auto& p : enumerate_bounded_posets(n, cap)) {
    std::vector<int> comp(n, -1);
    comp[p.bottom] = p.top;
    comp[p.top] = p.bottom;
    auto rec = [&](auto&& self, int i) -> void {
      while (i < n && comp[i] >= 0) ++i;
      if (i == n) {
        OrthomodularPoset a{p, comp};
        if (check_omp_axioms(a)) out.push_back(std::move(a));
        return;
      }
      for (int v = 0; v < n; ++v) {
        if (comp[v] >= 0 && comp[v] != i) continue;  // keep it an involution
        const int saved = comp[v];
        comp[i] = v;
        comp[v] = i;
        self(self, i + 1);
        comp[i] = -1;
        comp[v] = saved;
        if (v == i) comp[i] = -1;
      }
    };
    rec(rec, 0);
  }
  return out;
}

std::vector<std::vector<int>> enumerate_omp_morphisms(
    const OrthomodularPoset& a, const OrthomodularPoset& b,
    OmpMorphismRule rule) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(a.size(), -1);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == a.size()) {
      if (check_omp_morphism(f, a, b, rule)) out.push_back(f);
      return;
    }
    for (int v = 0; v < b.size(); ++v) {
      f[i] = v;
      self(self, i + 1);
    }
    f[i] = -1;
  };
  rec(rec, 0);
  return out;
}

}  // namespace kalmbach
