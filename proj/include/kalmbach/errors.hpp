#pragma once

#include <stdexcept>
#include <string>

namespace kalmbach {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// input / construction errors
struct ParseError : Error { using Error::Error; };
struct CycleDetected : Error { using Error::Error; };
struct NoBound : Error { using Error::Error; };
struct TrivialPoset : Error { using Error::Error; };
struct NotClosed : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };

// errors raised by partial operations on bad arguments
struct UndefinedDifference : Error { using Error::Error; };
struct UndefinedSum : Error { using Error::Error; };
struct BaseNotLattice : Error { using Error::Error; };
struct MissingJoin : Error { using Error::Error; };
struct MissingMeet : Error { using Error::Error; };
struct NotOrthogonal : Error { using Error::Error; };
struct JoinMissing : Error { using Error::Error; };
struct NotAChain : Error { using Error::Error; };

// errors that indicate a bug in a checker, not bad user input
struct NotAPartialOrder : Error { using Error::Error; };
struct NonUniqueWitness : Error { using Error::Error; };
struct DAxiomFailure : Error { using Error::Error; };
struct InternalInconsistency : Error { using Error::Error; };

}  // namespace kalmbach
