#pragma once

#include <stdexcept>
#include <string>

namespace koszul {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define KOSZUL_ERROR(Name)                                        \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

KOSZUL_ERROR(CircuitAxiomViolation)
KOSZUL_ERROR(InvalidGraph)
KOSZUL_ERROR(NotSimple)
KOSZUL_ERROR(NotSupersolvable)
KOSZUL_ERROR(SignedOnPlainMatroid)
KOSZUL_ERROR(NotRankTwoCoplanar)
KOSZUL_ERROR(NotAutomorphism)
KOSZUL_ERROR(NotGeneric)
KOSZUL_ERROR(NotEGeneric)
KOSZUL_ERROR(DegreeMismatch)
KOSZUL_ERROR(NegativePower)
KOSZUL_ERROR(NonIntegralExpansion)
KOSZUL_ERROR(PadTooSmall)
KOSZUL_ERROR(NotAGroup)
KOSZUL_ERROR(NonGenuine)
KOSZUL_ERROR(OutOfStatedRange)
KOSZUL_ERROR(InsufficientRange)
KOSZUL_ERROR(InvalidArgument)

#undef KOSZUL_ERROR

// Parse errors carry a location (JSON pointer or "line:col")
class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& what)
      : Error("ParseError", location + ": " + what), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

}  // namespace koszul
