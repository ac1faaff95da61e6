#pragma once

#include <stdexcept>
#include <string>

namespace lucastk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

#define LUCASTK_DEFINE_ERROR(Name, Base)   \
  class Name : public Base {               \
   public:                                 \
    using Base::Base;                      \
  }

// arith
LUCASTK_DEFINE_ERROR(InvalidModulus, InvalidArgument);
LUCASTK_DEFINE_ERROR(NotCoprime, InvalidArgument);
LUCASTK_DEFINE_ERROR(OutOfValidityRange, InvalidArgument);
LUCASTK_DEFINE_ERROR(IncompleteFactorization, Error);

// lucas
LUCASTK_DEFINE_ERROR(IndexGuardExceeded, InvalidArgument);
LUCASTK_DEFINE_ERROR(ModulusGuardExceeded, InvalidArgument);

// appearance
LUCASTK_DEFINE_ERROR(UnsupportedPrime, InvalidArgument);

// linforms
LUCASTK_DEFINE_ERROR(DegenerateQuadratic, InvalidArgument);
LUCASTK_DEFINE_ERROR(NoFiniteBound, InvalidArgument);
LUCASTK_DEFINE_ERROR(PrecisionCapReached, Error);

// cfrac
LUCASTK_DEFINE_ERROR(EnclosureTooWide, Error);
LUCASTK_DEFINE_ERROR(AmbiguousHalfway, Error);
LUCASTK_DEFINE_ERROR(PrecisionExhausted, Error);
LUCASTK_DEFINE_ERROR(NoPositiveEpsilon, Error);

// solvers
LUCASTK_DEFINE_ERROR(UnsupportedModulus, InvalidArgument);

#undef LUCASTK_DEFINE_ERROR

}  // namespace lucastk
