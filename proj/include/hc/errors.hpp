#pragma once

#include <stdexcept>
#include <string>

namespace hc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadVertexId : Error { using Error::Error; };
struct CycleDetected : Error { using Error::Error; };
struct DisconnectedGraph : Error { using Error::Error; };
struct MissingVertexColor : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };
struct NotAPermutation : Error { using Error::Error; };
struct NegativeIncrement : Error { using Error::Error; };
struct BadParams : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct Inexhaustive : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace hc
