#pragma once

#include <stdexcept>
#include <string>

namespace absorblab {

// Base class for all domain errors thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A ring/module/phi spec violates its construction invariants
// (n < 2, improper quotient, zero ring, bad JSON, ...).
struct MalformedSpec : Error { using Error::Error; };

// An internal consistency check failed after construction; this signals a
// bug in a construction routine, not bad user input.
struct AxiomViolation : Error { using Error::Error; };

// The multiplicative set of a localization contains 0.
struct ZeroInS : Error { using Error::Error; };

// A structure exceeds the configured exhaustive-search bound.
struct OrderTooLarge : Error { using Error::Error; };

// An ideal was combined with a ring it does not belong to.
struct RingMismatch : Error { using Error::Error; };

// A predicate that requires a proper ideal was given an improper one.
struct ImproperIdeal : Error { using Error::Error; };

// The requested evaluation route is not legal for the given phi.
struct RouteUnavailable : Error { using Error::Error; };

// A product phi was evaluated on a ring that is not a matching product.
struct SpecMismatch : Error { using Error::Error; };

// A table-backed phi has no entry for the requested ideal.
struct TableMiss : Error { using Error::Error; };

// verify() was asked for a theorem id it does not know.
struct UnknownTheorem : Error { using Error::Error; };

// A corpus spec exceeds the global order bound.
struct CapExceeded : Error { using Error::Error; };

// A counterexample-search expression failed to parse.
struct BadExpression : Error { using Error::Error; };

// A cache file exists but cannot be used (corrupt or wrong schema).
struct CacheError : Error { using Error::Error; };

}  // namespace absorblab
