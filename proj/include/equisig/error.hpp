#ifndef EQUISIG_ERROR_HPP
#define EQUISIG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace equisig {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A precondition on the arguments of an operation was violated.
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  //! Inversion of zero, or of an element that is not a unit where one is
  //! required.
  class DivisionByZero : public Error {
   public:
    using Error::Error;
  };

  //! Two operands live over different groups.
  class GroupMismatch : public Error {
   public:
    using Error::Error;
  };

  //! The geometric hypothesis behind a fiber-class or fixed-point formula
  //! does not hold for the supplied data.
  class HypothesisViolation : public Error {
   public:
    using Error::Error;
  };

  //! Malformed structured input; `path()` names the offending location.
  class SchemaError : public Error {
   public:
    SchemaError(std::string path, std::string const& what)
        : Error(path + ": " + what), _path(std::move(path)) {}
    std::string const& path() const noexcept {
      return _path;
    }

   private:
    std::string _path;
  };

  //! An internal consistency check failed; indicates a bug.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

}  // namespace equisig

#endif  // EQUISIG_ERROR_HPP
