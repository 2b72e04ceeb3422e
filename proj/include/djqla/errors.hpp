#pragma once

#include <stdexcept>
#include <string>

namespace djqla {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DJQLA_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

DJQLA_DEFINE_ERROR(DivisionByZero);
DJQLA_DEFINE_ERROR(MissingSymbol);
DJQLA_DEFINE_ERROR(ZeroSubstitutionForUnit);
DJQLA_DEFINE_ERROR(ParseError);
DJQLA_DEFINE_ERROR(DimensionMismatch);
DJQLA_DEFINE_ERROR(InvalidSpec);
DJQLA_DEFINE_ERROR(NotIce);
DJQLA_DEFINE_ERROR(NotInvertible);
DJQLA_DEFINE_ERROR(NotSkewInvertible);
DJQLA_DEFINE_ERROR(NotHecke);
DJQLA_DEFINE_ERROR(DegenerateSpectrum);
DJQLA_DEFINE_ERROR(NotStandard);
DJQLA_DEFINE_ERROR(DegenerateParameters);
DJQLA_DEFINE_ERROR(GenericityFailure);
DJQLA_DEFINE_ERROR(NotTriangular);
DJQLA_DEFINE_ERROR(Unsupported);

#undef DJQLA_DEFINE_ERROR

}  // namespace djqla
