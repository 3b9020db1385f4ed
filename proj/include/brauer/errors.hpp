#pragma once

#include <stdexcept>
#include <string>

namespace brauer {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BRAUER_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

// field tower
BRAUER_DEFINE_ERROR(InversionOfZero);
BRAUER_DEFINE_ERROR(ZeroInput);
BRAUER_DEFINE_ERROR(PoleAtEvaluationPoint);
BRAUER_DEFINE_ERROR(ModularDegeneration);
BRAUER_DEFINE_ERROR(FieldModeMismatch);

// diagrams and algebra
BRAUER_DEFINE_ERROR(IndexOutOfRange);
BRAUER_DEFINE_ERROR(SizeMismatch);
BRAUER_DEFINE_ERROR(BoundExceeded);
BRAUER_DEFINE_ERROR(ShrinkNotAllowed);

// tableaux
BRAUER_DEFINE_ERROR(ShapeParityMismatch);
BRAUER_DEFINE_ERROR(InvalidTableau);
BRAUER_DEFINE_ERROR(ZeroFactor);

// idempotents
BRAUER_DEFINE_ERROR(ContentCollision);
BRAUER_DEFINE_ERROR(ZeroValue);
BRAUER_DEFINE_ERROR(NotAllAdditions);
BRAUER_DEFINE_ERROR(NotProportional);
BRAUER_DEFINE_ERROR(DegenerateParameters);
BRAUER_DEFINE_ERROR(DegeneratePoints);

// serialization / parsing
BRAUER_DEFINE_ERROR(ParseError);

#undef BRAUER_DEFINE_ERROR

}  // namespace brauer

namespace brauer {
/// Two constructions that must agree did not.
class CrossCheckMismatch : public Error {
 public:
  using Error::Error;
};
}  // namespace brauer
