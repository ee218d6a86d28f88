#include "kalmbach/effect_algebra.hpp"

#include <algorithm>

namespace kalmbach {

Verdict check_ea_axioms(const EffectAlgebra& e) {
  const int n = e.size();
  if (n == 0) return Verdict::fail("empty carrier");
  if (e.zero == e.one) return Verdict::fail("zero equals one");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (e.defined(a, b) && (e.sum(a, b) < 0 || e.sum(a, b) >= n))
        return Verdict::fail("table entry out of range");

  // E1: commutativity of definedness and value
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (e.oplus[a][b] != e.oplus[b][a])
        return Verdict::fail("E1 at (" + e.name(a) + "," + e.name(b) + ")");

  // E2: partial associativity
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!e.defined(a, b)) continue;
      const int ab = e.sum(a, b);
      for (int c = 0; c < n; ++c) {
        if (!e.defined(ab, c)) continue;
        if (!e.defined(b, c) || !e.defined(a, e.sum(b, c)) ||
            e.sum(ab, c) != e.sum(a, e.sum(b, c)))
          return Verdict::fail("E2 at (" + e.name(a) + "," + e.name(b) + "," +
                               e.name(c) + ")");
      }
    }

  // E3: unique orthosupplement
  for (int a = 0; a < n; ++a) {
    int count = 0;
    for (int b = 0; b < n; ++b)
      if (e.defined(a, b) && e.sum(a, b) == e.one) ++count;
    if (count != 1)
      return Verdict::fail("E3 at " + e.name(a) + " (" +
                           std::to_string(count) + " orthosupplements)");
  }

  // E4
  for (int a = 0; a < n; ++a)
    if (e.defined(a, e.one) && a != e.zero)
      return Verdict::fail("E4 at " + e.name(a));

  return Verdict::pass();
}

int orthosupplement(const EffectAlgebra& e, int a) {
  int found = -1;
  for (int b = 0; b < e.size(); ++b)
    if (e.defined(a, b) && e.sum(a, b) == e.one) {
      if (found >= 0)
        throw NonUniqueWitness("two orthosupplements for " + e.name(a));
      found = b;
    }
  if (found < 0) throw NonUniqueWitness("no orthosupplement for " + e.name(a));
  return found;
}

bool ea_leq(const EffectAlgebra& e, int a, int b) {
  for (int c = 0; c < e.size(); ++c)
    if (e.defined(a, c) && e.sum(a, c) == b) return true;
  return false;
}

BoundedPoset derived_order(const EffectAlgebra& e) {
  const int n = e.size();
  BoundedPoset p;
  p.elements = e.elements;
  p.leq.assign(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) p.leq[a][b] = ea_leq(e, a, b);
  p.bottom = e.zero;
  p.top = e.one;
  if (auto v = check_poset_invariants(p); !v)
    throw NotAPartialOrder("derived order invalid: " + v.witness);
  return p;
}

int derived_ominus(const EffectAlgebra& e, int b, int a) {
  int found = -1;
  for (int c = 0; c < e.size(); ++c)
    if (e.defined(a, c) && e.sum(a, c) == b) {
      if (found >= 0)
        throw NonUniqueWitness("two witnesses for " + e.name(b) + " - " +
                               e.name(a));
      found = c;
    }
  if (found < 0)
    throw UndefinedDifference(e.name(b) + " - " + e.name(a) + " undefined");
  return found;
}

Verdict check_dposet_axioms(const DPoset& d) {
  const auto& p = d.carrier;
  const int n = p.size();
  if (auto v = check_poset_invariants(p); !v) return v;

  // D1: defined exactly on a <= b
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) {
      const bool def = d.ominus[b][a] >= 0;
      if (def != p.leq[a][b])
        return Verdict::fail("D1 at (" + p.name(b) + "," + p.name(a) + ")");
      if (def && d.ominus[b][a] >= n)
        return Verdict::fail("table entry out of range");
    }

  // D2
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!p.leq[a][b]) continue;
      const int ba = d.ominus[b][a];
      if (!p.leq[ba][b])
        return Verdict::fail("D2 (b-a <= b) at (" + p.name(b) + "," +
                             p.name(a) + ")");
      if (d.ominus[b][ba] != a)
        return Verdict::fail("D2 (b-(b-a)=a) at (" + p.name(b) + "," +
                             p.name(a) + ")");
    }

  // D3
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (!(p.leq[a][b] && p.leq[b][c])) continue;
        const int cb = d.ominus[c][b];
        const int ca = d.ominus[c][a];
        if (!p.leq[cb][ca])
          return Verdict::fail("D3 (c-b <= c-a) at (" + p.name(a) + "," +
                               p.name(b) + "," + p.name(c) + ")");
        if (d.ominus[ca][cb] != d.ominus[b][a])
          return Verdict::fail("D3 identity at (" + p.name(a) + "," +
                               p.name(b) + "," + p.name(c) + ")");
      }
  return Verdict::pass();
}

DPoset ea_to_dposet(const EffectAlgebra& e) {
  DPoset d;
  d.carrier = derived_order(e);
  const int n = e.size();
  d.ominus.assign(n, std::vector<int>(n, -1));
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a)
      if (d.carrier.leq[a][b]) d.ominus[b][a] = derived_ominus(e, b, a);
  return d;
}

EffectAlgebra dposet_to_ea(const DPoset& d) {
  const auto& p = d.carrier;
  const int n = p.size();
  EffectAlgebra e;
  e.elements = p.elements;
  e.zero = p.bottom;
  e.one = p.top;
  e.oplus.assign(n, std::vector<int>(n, EffectAlgebra::UNDEFINED));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int tb = d.ominus[p.top][b];  // 1 - b
      if (!p.leq[a][tb]) continue;        // a + b defined iff a <= 1 - b
      const int ta = d.ominus[p.top][a];
      if (!p.leq[b][ta])
        throw DAxiomFailure("a <= 1-b but b !<= 1-a at (" + p.name(a) + "," +
                            p.name(b) + ")");
      e.oplus[a][b] = d.ominus[p.top][d.ominus[ta][b]];
    }
  return e;
}

Verdict check_ea_morphism(const std::vector<int>& f, const EffectAlgebra& a,
                          const EffectAlgebra& b) {
  if (static_cast<int>(f.size()) != a.size())
    return Verdict::fail("map not total on source");
  for (int v : f)
    if (v < 0 || v >= b.size()) return Verdict::fail("map leaves target");
  if (f[a.one] != b.one) return Verdict::fail("one not preserved");
  if (f[a.zero] != b.zero)
    return Verdict::fail("zero not preserved");  // implied by sum preservation
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y) {
      if (!a.defined(x, y)) continue;
      if (!b.defined(f[x], f[y]) || b.sum(f[x], f[y]) != f[a.sum(x, y)])
        return Verdict::fail("sum not preserved at (" + a.name(x) + "," +
                             a.name(y) + ")");
    }
  return Verdict::pass();
}

Verdict lemma1_suite(const EffectAlgebra& e) {
  const int n = e.size();
  const BoundedPoset ord = derived_order(e);
  auto le = [&](int a, int b) { return ord.leq[a][b]; };
  std::vector<int> perp(n);
  for (int a = 0; a < n; ++a) perp[a] = orthosupplement(e, a);
  // total ominus table, -1 where a !<= b
  std::vector<std::vector<int>> om(n, std::vector<int>(n, -1));
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a)
      if (le(a, b)) om[b][a] = derived_ominus(e, b, a);

  auto at2 = [&](const char* part, int a, int b) {
    return std::string(part) + " at (" + e.name(a) + "," + e.name(b) + ")";
  };
  auto at3 = [&](const char* part, int a, int b, int c) {
    return std::string(part) + " at (" + e.name(a) + "," + e.name(b) + "," +
           e.name(c) + ")";
  };

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // (a) a <= b' iff b <= a' iff a+b defined; (a+b)' = a'-b = b'-a
      const bool c1 = le(a, perp[b]);
      const bool c2 = le(b, perp[a]);
      const bool c3 = e.defined(a, b);
      if (c1 != c3 || c2 != c3)
        return Verdict::fail(at2("(a) biconditional", a, b));
      if (c3) {
        const int lhs = perp[e.sum(a, b)];
        if (lhs != om[perp[a]][b] || lhs != om[perp[b]][a])
          return Verdict::fail(at2("(a) identity", a, b));
      }
      // (b) a <= b iff a+b' defined; (b-a)' = a+b'
      const bool d1 = le(a, b);
      const bool d3 = e.defined(a, perp[b]);
      if (d1 != d3) return Verdict::fail(at2("(b) biconditional", a, b));
      if (d1 && perp[om[b][a]] != e.sum(a, perp[b]))
        return Verdict::fail(at2("(b) identity", a, b));
    }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        // (c) a <= c-b iff b <= c-a iff a+b <= c;
        //     c-(a+b) = (c-a)-b = (c-b)-a
        const bool c1 = le(b, c) && le(a, om[c][b]);
        const bool c2 = le(a, c) && le(b, om[c][a]);
        const bool c3 = e.defined(a, b) && le(e.sum(a, b), c);
        if (c1 != c3 || c2 != c3)
          return Verdict::fail(at3("(c) biconditional", a, b, c));
        if (c3) {
          const int lhs = om[c][e.sum(a, b)];
          if (lhs != om[om[c][a]][b] || lhs != om[om[c][b]][a])
            return Verdict::fail(at3("(c) identity", a, b, c));
        }
        // (d) a <= b <= c iff a+(c-b) defined and a+(c-b) <= c;
        //     c-(b-a) = a+(c-b)
        const bool d1 = le(a, b) && le(b, c);
        const bool d3 = le(b, c) && e.defined(a, om[c][b]) &&
                        le(e.sum(a, om[c][b]), c);
        if (d1 != d3) return Verdict::fail(at3("(d) biconditional", a, b, c));
        if (d1 && om[c][om[b][a]] != e.sum(a, om[c][b]))
          return Verdict::fail(at3("(d) identity", a, b, c));
      }
  return Verdict::pass();
}

namespace {

std::vector<std::string> ea_names(int n) {
  std::vector<std::string> names;
  names.emplace_back("0");
  for (int i = 0; i < n - 2; ++i) names.emplace_back(1, char('a' + i));
  names.emplace_back("1");
  return names;
}

}  // namespace

std::vector<EffectAlgebra> enumerate_effect_algebras(int n, int cap) {
  if (n < 2 || n > cap)
    throw CapExceeded("effect algebra size " + std::to_string(n) +
                      " outside [2," + std::to_string(cap) + "]");
  EffectAlgebra base;
  base.elements = ea_names(n);
  base.zero = 0;
  base.one = n - 1;
  base.oplus.assign(n, std::vector<int>(n, EffectAlgebra::UNDEFINED));
  // Entries involving 0 and 1 are forced in any valid table (0+a = a,
  // 1+a defined only for a = 0); only middle-middle cells are searched.
  for (int a = 0; a < n; ++a) {
    base.oplus[0][a] = a;
    base.oplus[a][0] = a;
  }
  std::vector<std::pair<int, int>> cells;
  for (int a = 1; a < n - 1; ++a)
    for (int b = a; b < n - 1; ++b) cells.emplace_back(a, b);

  std::vector<EffectAlgebra> out;
  std::vector<int> choice(cells.size(), EffectAlgebra::UNDEFINED);
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == cells.size()) {
      EffectAlgebra e = base;
      for (size_t k = 0; k < cells.size(); ++k) {
        e.oplus[cells[k].first][cells[k].second] = choice[k];
        e.oplus[cells[k].second][cells[k].first] = choice[k];
      }
      if (check_ea_axioms(e)) out.push_back(std::move(e));
      return;
    }
    for (int v = EffectAlgebra::UNDEFINED; v < n; ++v) {
      choice[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::vector<int>> enumerate_ea_morphisms(const EffectAlgebra& a,
                                                     const EffectAlgebra& b) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(a.size(), -1);
  f[a.zero] = b.zero;
  f[a.one] = b.one;
  auto rec = [&](auto&& self, int i) -> void {
    while (i < a.size() && f[i] >= 0) ++i;
    if (i == a.size()) {
      if (check_ea_morphism(f, a, b)) out.push_back(f);
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
