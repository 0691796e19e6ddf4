#pragma once

#include <stdexcept>
#include <string>

namespace msym {

/// Base class for every error caused by bad input (as opposed to a bug).
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  /// Stable machine-readable error name, e.g. "SingularCurve".
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define MSYM_DEFINE_ERROR(Name)                                      \
  class Name : public DomainError {                                  \
   public:                                                           \
    explicit Name(const std::string& what) : DomainError(#Name, what) {} \
  }

MSYM_DEFINE_ERROR(ParseError);
MSYM_DEFINE_ERROR(SingularCurve);
MSYM_DEFINE_ERROR(NonPrimeModulus);
MSYM_DEFINE_ERROR(InvalidAddress);
MSYM_DEFINE_ERROR(NotAnAnchor);
MSYM_DEFINE_ERROR(NotMinimal);
MSYM_DEFINE_ERROR(DegenerateSymbol);
MSYM_DEFINE_ERROR(WrongSiteType);
MSYM_DEFINE_ERROR(CuspNotAttached);
MSYM_DEFINE_ERROR(YShapeViolated);
MSYM_DEFINE_ERROR(UnbalancedInput);
MSYM_DEFINE_ERROR(IoError);

#undef MSYM_DEFINE_ERROR

/// Raised when an internal progress guarantee is violated; indicates a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace msym
