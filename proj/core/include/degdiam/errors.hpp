#pragma once

#include <stdexcept>
#include <string>

namespace degdiam {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Group validation.
struct BadParameter final : Error { using Error::Error; };
struct NotAUnit final : Error { using Error::Error; };
struct OrderMismatch final : Error { using Error::Error; };

// Element handling.
struct CoordinateOutOfRange final : Error { using Error::Error; };
struct IndexOutOfRange final : Error { using Error::Error; };

// Generator sets and graph traversal.
struct ContainsIdentity final : Error { using Error::Error; };
struct EmptySet final : Error { using Error::Error; };
struct MemoryBudgetExceeded final : Error { using Error::Error; };
struct DistanceOverflow final : Error { using Error::Error; };
struct TooLarge final : Error { using Error::Error; };
struct SinkError final : Error { using Error::Error; };

// Search.
struct InfeasibleDegree final : Error { using Error::Error; };
struct RetryBudgetExhausted final : Error { using Error::Error; };
struct MooreInfeasible final : Error { using Error::Error; };

// Serialization.
struct ParseError final : Error { using Error::Error; };
struct SpecInvalid final : Error { using Error::Error; };

}  // namespace degdiam
