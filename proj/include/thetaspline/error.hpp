#pragma once

#include <stdexcept>
#include <string>

namespace thetaspline {

// Broad failure classes; the CLI maps them onto exit codes.
enum class ErrorClass { validation, numeric, io };

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, const std::string& what)
      : std::runtime_error(what), class_(cls) {}
  ErrorClass error_class() const noexcept { return class_; }

 private:
  ErrorClass class_;
};

#define THETASPLINE_DEFINE_ERROR(Name, Class)                  \
  class Name : public Error {                                  \
   public:                                                     \
    explicit Name(const std::string& what)                     \
        : Error(ErrorClass::Class, #Name ": " + what) {}       \
  };

THETASPLINE_DEFINE_ERROR(ValidationError, validation)
THETASPLINE_DEFINE_ERROR(DomainError, validation)
THETASPLINE_DEFINE_ERROR(PoleError, validation)
THETASPLINE_DEFINE_ERROR(DuplicateKnot, validation)
THETASPLINE_DEFINE_ERROR(DuplicateNode, validation)
THETASPLINE_DEFINE_ERROR(PrecisionExhausted, numeric)
THETASPLINE_DEFINE_ERROR(NonConvergent, numeric)
THETASPLINE_DEFINE_ERROR(SlowConvergence, numeric)
THETASPLINE_DEFINE_ERROR(ZeroFindingFailure, numeric)
THETASPLINE_DEFINE_ERROR(IntegrandOverflow, numeric)
THETASPLINE_DEFINE_ERROR(IoError, io)

#undef THETASPLINE_DEFINE_ERROR

}  // namespace thetaspline
