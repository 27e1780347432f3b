#pragma once

#include <stdexcept>
#include <string>

namespace cycloseq {

/// Base class for every domain error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NotPrimeError : Error { using Error::Error; };
struct NotInvertibleError : Error { using Error::Error; };
struct OrderDoesNotDivideError : Error { using Error::Error; };
struct NotPrimitiveRootError : Error { using Error::Error; };
struct ZeroResidueError : Error { using Error::Error; };
struct UnsupportedOrderError : Error { using Error::Error; };
struct MissingHallParameterError : Error { using Error::Error; };
struct NotHallPrimeError : Error { using Error::Error; };
struct TableMismatchError : Error { using Error::Error; };
struct NotCoprimeError : Error { using Error::Error; };
struct PeriodMismatchError : Error { using Error::Error; };
struct ModulusMismatchError : Error { using Error::Error; };
struct BadCongruenceError : Error { using Error::Error; };
struct NotTwinPrimeError : Error { using Error::Error; };
struct BadPairError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace cycloseq
