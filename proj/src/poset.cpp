#include "kalmbach/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace kalmbach {

int BoundedPoset::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i] == name) return i;
  throw ParseError("unknown element '" + name + "'");
}

BoundedPoset validate_poset(const RawPoset& raw) {
  const int n = static_cast<int>(raw.elements.size());
  if (n == 0) throw ParseError("empty element list");
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(raw.elements[i], i).second)
      throw ParseError("duplicate element '" + raw.elements[i] + "'");
  }
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw ParseError("unknown element '" + name + "'");
    return it->second;
  };

  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  for (const auto& [a, b] : raw.relation) leq[lookup(a)][lookup(b)] = true;

  if (raw.mode == ClosureMode::cover) {
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (leq[i][k])
          for (int j = 0; j < n; ++j)
            if (leq[k][j]) leq[i][j] = true;
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (leq[i][j])
          for (int k = 0; k < n; ++k)
            if (leq[j][k] && !leq[i][k])
              throw NotClosed("full-mode relation misses (" +
                              raw.elements[i] + "," + raw.elements[k] + ")");
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq[i][j] && leq[j][i])
        throw CycleDetected("cycle through '" + raw.elements[i] + "' and '" +
                            raw.elements[j] + "'");

  auto find_bound = [&](bool bottomish) -> int {
    int found = -1;
    for (int i = 0; i < n; ++i) {
      bool all = true;
      for (int j = 0; j < n; ++j)
        all = all && (bottomish ? leq[i][j] : leq[j][i]);
      if (all) {
        if (found >= 0)
          throw NoBound("two candidates for a bound");  // unreachable: antisym
        found = i;
      }
    }
    if (found < 0)
      throw NoBound(std::string("no ") + (bottomish ? "bottom" : "top") +
                    " element");
    return found;
  };

  const int bottom = raw.bottom ? lookup(*raw.bottom) : find_bound(true);
  const int top = raw.top ? lookup(*raw.top) : find_bound(false);

  BoundedPoset p;
  p.elements = raw.elements;
  p.leq = std::move(leq);
  p.bottom = bottom;
  p.top = top;
  if (p.bottom == p.top) throw TrivialPoset("bottom equals top");
  if (auto v = check_poset_invariants(p); !v)
    throw NoBound(v.witness);  // declared bounds not actual bounds
  return p;
}

Verdict check_poset_invariants(const BoundedPoset& p) {
  const int n = p.size();
  if (n == 0) return Verdict::fail("empty carrier");
  for (int i = 0; i < n; ++i)
    if (!p.leq[i][i]) return Verdict::fail("not reflexive at " + p.name(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && p.leq[i][j] && p.leq[j][i])
        return Verdict::fail("antisymmetry fails at (" + p.name(i) + "," +
                             p.name(j) + ")");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.leq[i][j])
        for (int k = 0; k < n; ++k)
          if (p.leq[j][k] && !p.leq[i][k])
            return Verdict::fail("transitivity fails at (" + p.name(i) + "," +
                                 p.name(j) + "," + p.name(k) + ")");
  for (int i = 0; i < n; ++i) {
    if (!p.leq[p.bottom][i])
      return Verdict::fail("bottom not below " + p.name(i));
    if (!p.leq[i][p.top]) return Verdict::fail("top not above " + p.name(i));
  }
  if (p.bottom == p.top) return Verdict::fail("bottom equals top");
  return Verdict::pass();
}

std::optional<int> join_of(const BoundedPoset& p, int a, int b) {
  const int n = p.size();
  int least = -1;
  for (int u = 0; u < n; ++u) {
    if (!(p.leq[a][u] && p.leq[b][u])) continue;
    if (least < 0 || p.leq[u][least]) least = u;
  }
  if (least < 0) return std::nullopt;
  for (int u = 0; u < n; ++u)
    if (p.leq[a][u] && p.leq[b][u] && !p.leq[least][u]) return std::nullopt;
  return least;
}

std::optional<int> meet_of(const BoundedPoset& p, int a, int b) {
  const int n = p.size();
  int greatest = -1;
  for (int u = 0; u < n; ++u) {
    if (!(p.leq[u][a] && p.leq[u][b])) continue;
    if (greatest < 0 || p.leq[greatest][u]) greatest = u;
  }
  if (greatest < 0) return std::nullopt;
  for (int u = 0; u < n; ++u)
    if (p.leq[u][a] && p.leq[u][b] && !p.leq[u][greatest]) return std::nullopt;
  return greatest;
}

bool is_lattice(const BoundedPoset& p) {
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (!join_of(p, a, b) || !meet_of(p, a, b)) return false;
  return true;
}

std::vector<std::pair<int, int>> covering_relation(const BoundedPoset& p) {
  std::vector<std::pair<int, int>> covers;
  const int n = p.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!p.lt(a, b)) continue;
      bool direct = true;
      for (int c = 0; c < n && direct; ++c)
        if (p.lt(a, c) && p.lt(c, b)) direct = false;
      if (direct) covers.emplace_back(a, b);
    }
  return covers;
}

bool is_chain_set(const BoundedPoset& p, const Chain& members) {
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i + 1; j < members.size(); ++j) {
      if (members[i] == members[j]) return false;
      if (!p.comparable(members[i], members[j])) return false;
    }
  return true;
}

std::vector<int> chain_in_order(const BoundedPoset& p, const Chain& c) {
  std::vector<int> ordered = c;
  std::sort(ordered.begin(), ordered.end(),
            [&](int a, int b) { return p.lt(a, b); });
  return ordered;
}

std::vector<Chain> all_chains(const BoundedPoset& p, Parity parity) {
  std::vector<Chain> out;
  Chain cur;
  // Preorder DFS over increasing indices emits lexicographic order.
  auto dfs = [&](auto&& self, int start) -> void {
    if (parity == Parity::any || cur.size() % 2 == 0) out.push_back(cur);
    for (int i = start; i < p.size(); ++i) {
      bool fits = true;
      for (int m : cur) fits = fits && p.comparable(m, i);
      if (!fits) continue;
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

Chain symmetric_difference(const Chain& a, const Chain& b) {
  Chain out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

Verdict is_morphism(const std::vector<int>& f, const BoundedPoset& p,
                    const BoundedPoset& q) {
  if (static_cast<int>(f.size()) != p.size())
    return Verdict::fail("map not total on source");
  for (int v : f)
    if (v < 0 || v >= q.size()) return Verdict::fail("map leaves target");
  if (f[p.bottom] != q.bottom)
    return Verdict::fail("bottom not preserved: " + p.name(p.bottom) +
                         " -> " + q.name(f[p.bottom]));
  if (f[p.top] != q.top)
    return Verdict::fail("top not preserved: " + p.name(p.top) + " -> " +
                         q.name(f[p.top]));
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.leq[a][b] && !q.leq[f[a]][f[b]])
        return Verdict::fail("order not preserved at (" + p.name(a) + "," +
                             p.name(b) + ")");
  return Verdict::pass();
}

std::vector<int> compose(const std::vector<int>& g, const std::vector<int>& f) {
  std::vector<int> h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[i] = g[f[i]];
  return h;
}

std::vector<int> identity_map(int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

namespace {

std::vector<std::string> standard_names(int n) {
  std::vector<std::string> names;
  names.emplace_back("0");
  for (int i = 0; i < n - 2; ++i) names.emplace_back(1, char('a' + i));
  names.emplace_back("1");
  return names;
}

}  // namespace

std::vector<BoundedPoset> enumerate_bounded_posets(int n, int cap) {
  if (n < 2 || n > cap)
    throw CapExceeded("poset size " + std::to_string(n) +
                      " outside [2," + std::to_string(cap) + "]");
  const int m = n - 2;  // middle elements, indices 1..n-2
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (i != j) slots.emplace_back(i, j);

  std::vector<BoundedPoset> out;
  const auto names = standard_names(n);
  for (unsigned long mask = 0; mask < (1ul << slots.size()); ++mask) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) {
      leq[i][i] = true;
      leq[0][i] = true;
      leq[i][n - 1] = true;
    }
    for (size_t s = 0; s < slots.size(); ++s)
      if (mask & (1ul << s)) leq[slots[s].first][slots[s].second] = true;

    bool order = true;
    for (int i = 1; i <= m && order; ++i)
      for (int j = 1; j <= m && order; ++j) {
        if (i != j && leq[i][j] && leq[j][i]) order = false;
        if (leq[i][j])
          for (int k = 1; k <= m; ++k)
            if (leq[j][k] && !leq[i][k]) order = false;
      }
    if (!order) continue;

    BoundedPoset p{names, std::move(leq), 0, n - 1};
    if (auto v = check_poset_invariants(p); !v)
      throw InternalInconsistency("enumerated poset invalid: " + v.witness);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<BoundedPoset> dedupe_up_to_isomorphism(
    const std::vector<BoundedPoset>& posets) {
  std::vector<BoundedPoset> out;
  std::vector<std::vector<bool>> seen;  // canonical flattened matrices
  for (const auto& p : posets) {
    const int n = p.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    // canonical form: lexicographically least matrix over permutations
    // of the middle elements (bottom/top stay put)
    std::vector<bool> best;
    std::sort(perm.begin() + 1, perm.end() - (n > 1 ? 1 : 0));
    do {
      std::vector<bool> flat;
      flat.reserve(n * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) flat.push_back(p.leq[perm[i]][perm[j]]);
      if (best.empty() || flat < best) best = std::move(flat);
    } while (n > 2 &&
             std::next_permutation(perm.begin() + 1, perm.end() - 1));
    if (std::find(seen.begin(), seen.end(), best) == seen.end()) {
      seen.push_back(best);
      out.push_back(p);
    }
  }
  return out;
}

std::vector<std::vector<int>> enumerate_morphisms(const BoundedPoset& p,
                                                  const BoundedPoset& q) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(p.size(), -1);
  f[p.bottom] = q.bottom;
  f[p.top] = q.top;
  auto rec = [&](auto&& self, int i) -> void {
    while (i < p.size() && f[i] >= 0) ++i;
    if (i == p.size()) {
      if (is_morphism(f, p, q)) out.push_back(f);
      return;
    }
    for (int v = 0; v < q.size(); ++v) {
      f[i] = v;
      self(self, i + 1);
    }
    f[i] = -1;
  };
  rec(rec, 0);
  return out;
}

}  // namespace kalmbach
