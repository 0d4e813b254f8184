// Exception types shared by every module of liboxn.

#ifndef OXN_ERRORS_HPP_
#define OXN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace oxn {

  //! Base class of all exceptions thrown by liboxn.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Operands live on chains of different lengths.
  class DimensionError : public Error {
   public:
    using Error::Error;
  };

  //! An argument lies outside the domain of an operation.
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  //! A documented precondition of an operation does not hold.
  class ContractError : public Error {
   public:
    using Error::Error;
  };

  //! Two morphisms are not composable.
  class CompositionError : public Error {
   public:
    using Error::Error;
  };

  //! A finite semigroup could not be built (non-closure, non-associativity).
  class ConstructionError : public Error {
   public:
    using Error::Error;
  };

  //! A requested table or enumeration exceeds the configured limits.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

  //! Malformed textual literal.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

}  // namespace oxn

#endif  // OXN_ERRORS_HPP_
