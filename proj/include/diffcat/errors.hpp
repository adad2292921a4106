#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diffcat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define DIFFCAT_DEFINE_ERROR_FROM(Name, Base)                                  \
  class Name : public Base {                                                   \
  public:                                                                      \
    using Base::Base;                                                          \
  }
#define DIFFCAT_DEFINE_ERROR(Name) DIFFCAT_DEFINE_ERROR_FROM(Name, Error)

DIFFCAT_DEFINE_ERROR(NotEnumerable);
DIFFCAT_DEFINE_ERROR(SizeExceeded);
DIFFCAT_DEFINE_ERROR(DomainMismatch);
DIFFCAT_DEFINE_ERROR(TypeMismatch);
DIFFCAT_DEFINE_ERROR(ShapeMismatch);
DIFFCAT_DEFINE_ERROR(ModelRestriction);
DIFFCAT_DEFINE_ERROR_FROM(NoNegation, ModelRestriction);
DIFFCAT_DEFINE_ERROR_FROM(UnsupportedPrimitive, ModelRestriction);
DIFFCAT_DEFINE_ERROR(UnknownPrimitive);
DIFFCAT_DEFINE_ERROR_FROM(NotAdditive, ModelRestriction);
DIFFCAT_DEFINE_ERROR_FROM(NotCausal, ModelRestriction);
DIFFCAT_DEFINE_ERROR(NotFinite);
DIFFCAT_DEFINE_ERROR(ArithmeticOverflow);
DIFFCAT_DEFINE_ERROR(ParseError);
DIFFCAT_DEFINE_ERROR(OracleMismatch);

#undef DIFFCAT_DEFINE_ERROR
#undef DIFFCAT_DEFINE_ERROR_FROM

/// Raised by the term parser; carries the byte offset of the offending token.
class SyntaxError : public Error {
public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Raised by the term typechecker; `path` names the offending node.
class TypeError : public Error {
public:
  TypeError(const std::string& what, std::string path)
      : Error(what + " (at " + path + ")"), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

private:
  std::string path_;
};

} // namespace diffcat
