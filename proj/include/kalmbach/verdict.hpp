#pragma once

#include <string>
#include <utility>

namespace kalmbach {

// Result of a law/axiom check. On failure, `witness` names the first
// violation found in deterministic scan order.
struct Verdict {
  bool ok = true;
  std::string witness;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string w) { return {false, std::move(w)}; }
  explicit operator bool() const { return ok; }
};

}  // namespace kalmbach
