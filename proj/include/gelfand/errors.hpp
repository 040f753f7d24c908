#pragma once

#include <stdexcept>
#include <string>

namespace gelfand {

// Base of every error raised by the library. Each subclass names one failure
// mode so callers (and the CLI's exit-code mapping) can dispatch on type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GELFAND_ERROR(Name)                 \
  class Name : public Error {               \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Error(#Name ": " + what) {}       \
  };

GELFAND_ERROR(InvalidGroupElement)
GELFAND_ERROR(InvalidRepIndex)
GELFAND_ERROR(InvalidIsotypicIndex)
GELFAND_ERROR(InvalidArgument)
GELFAND_ERROR(InvalidSpectralParameter)
GELFAND_ERROR(InvalidProfile)
GELFAND_ERROR(NotPolynomial)
GELFAND_ERROR(EquivarianceViolation)
GELFAND_ERROR(QuadratureNotConverged)
GELFAND_ERROR(GridResolutionError)
GELFAND_ERROR(InsufficientResolution)
GELFAND_ERROR(InconsistentJetData)
GELFAND_ERROR(OrderViolation)

#undef GELFAND_ERROR

}  // namespace gelfand
