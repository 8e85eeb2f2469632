#ifndef RADO_ERRORS_HPP
#define RADO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rado {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Backend / graph errors.
struct InvalidVertex : Error { using Error::Error; };
struct LoopQuery : Error { using Error::Error; };
struct ExhaustedBackend : Error { using Error::Error; };
struct DisjointnessViolated : Error { using Error::Error; };
struct EmptyGraph : Error { using Error::Error; };

// Group errors.
struct InvalidLetter : Error { using Error::Error; };
struct FiniteGroupRejected : Error { using Error::Error; };

// Extension errors.
struct InvalidPartialIso : Error { using Error::Error; };
struct EquivarianceViolated : Error { using Error::Error; };
struct FreenessViolated : Error { using Error::Error; };
struct SingularActionDetected : Error { using Error::Error; };

// Genericity-engine errors.
struct BudgetExhausted : Error { using Error::Error; };
struct CommitConflict : Error { using Error::Error; };
struct IndexTooSmall : Error { using Error::Error; };
struct NotReduced : Error { using Error::Error; };
struct InvalidEdge : Error { using Error::Error; };
struct InvalidInput : Error { using Error::Error; };
struct DisconnectionFailure : Error { using Error::Error; };

// Harness errors.
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct UnknownSuite : Error { using Error::Error; };
struct IOError : Error { using Error::Error; };

}  // namespace rado

#endif
