#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kalmbach/errors.hpp"
#include "kalmbach/verdict.hpp"

namespace kalmbach {

// A totally ordered subset of a poset, kept as a strictly increasing
// sequence of element indices (set-canonical form). The empty chain is {}.
using Chain = std::vector<int>;

enum class ClosureMode { cover, full };
enum class Parity { even, any };

struct BoundedPoset {
  std::vector<std::string> elements;
  std::vector<std::vector<bool>> leq;  // leq[a][b] == (a <= b)
  int bottom = 0;
  int top = 0;

  int size() const { return static_cast<int>(elements.size()); }
  bool le(int a, int b) const { return leq[a][b]; }
  bool lt(int a, int b) const { return a != b && leq[a][b]; }
  bool comparable(int a, int b) const { return leq[a][b] || leq[b][a]; }
  const std::string& name(int i) const { return elements[i]; }
  int index_of(const std::string& name) const;  // throws ParseError on miss

  bool operator==(const BoundedPoset&) const = default;
};

struct RawPoset {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> relation;
  ClosureMode mode = ClosureMode::cover;
  std::optional<std::string> bottom;
  std::optional<std::string> top;
};

// Builds a BoundedPoset from raw input. In cover mode the reflexive-transitive
// closure is computed; in full mode the relation must already be closed.
// Throws CycleDetected / NoBound / TrivialPoset / NotClosed / ParseError.
BoundedPoset validate_poset(const RawPoset& raw);

// Re-checks reflexivity, antisymmetry, transitivity and boundedness.
Verdict check_poset_invariants(const BoundedPoset& p);

std::optional<int> join_of(const BoundedPoset& p, int a, int b);
std::optional<int> meet_of(const BoundedPoset& p, int a, int b);
bool is_lattice(const BoundedPoset& p);
std::vector<std::pair<int, int>> covering_relation(const BoundedPoset& p);

bool is_chain_set(const BoundedPoset& p, const Chain& members);
// Members of c sorted ascending in the poset order (total on a chain).
std::vector<int> chain_in_order(const BoundedPoset& p, const Chain& c);
// All chains of the requested parity, in lexicographic order on the
// index sequences; the empty chain comes first.
std::vector<Chain> all_chains(const BoundedPoset& p, Parity parity);
Chain symmetric_difference(const Chain& a, const Chain& b);

// Maps are plain per-element index assignments, source index -> target index.
Verdict is_morphism(const std::vector<int>& f, const BoundedPoset& p,
                    const BoundedPoset& q);
std::vector<int> compose(const std::vector<int>& g, const std::vector<int>& f);
std::vector<int> identity_map(int n);

// All labeled bounded posets on n elements, element 0 the bottom and
// element n-1 the top. Throws CapExceeded when n is out of range.
std::vector<BoundedPoset> enumerate_bounded_posets(int n, int cap = 5);
std::vector<BoundedPoset> dedupe_up_to_isomorphism(
    const std::vector<BoundedPoset>& posets);
std::vector<std::vector<int>> enumerate_morphisms(const BoundedPoset& p,
                                                  const BoundedPoset& q);

}  // namespace kalmbach
