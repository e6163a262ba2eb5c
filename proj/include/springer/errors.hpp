#ifndef SPRINGER_ERRORS_HPP
#define SPRINGER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace springer {

// Mathematical failures carry a stable machine-readable name so the CLI can
// map them to exit status 3 with the name in a structured field.
class MathError : public std::runtime_error {
public:
  MathError(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

// Input that fails a precondition or schema check (CLI exit status 2).
class ValidationError : public std::runtime_error {
public:
  ValidationError(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

#define SPRINGER_MATH_ERROR(cls)                                   \
  class cls : public MathError {                                   \
  public:                                                          \
    explicit cls(const std::string& what) : MathError(#cls, what) {} \
  }

#define SPRINGER_VALIDATION_ERROR(cls)                                   \
  class cls : public ValidationError {                                   \
  public:                                                                \
    explicit cls(const std::string& what) : ValidationError(#cls, what) {} \
  }

SPRINGER_MATH_ERROR(InsufficientPrecision);
SPRINGER_MATH_ERROR(NonUnitEntry);
SPRINGER_MATH_ERROR(NotRegular);
SPRINGER_MATH_ERROR(EmptyFiber);
SPRINGER_MATH_ERROR(NonIntegralDimension);
SPRINGER_MATH_ERROR(CharTwo);
SPRINGER_MATH_ERROR(KottwitzMismatch);
SPRINGER_MATH_ERROR(BudgetExceeded);

SPRINGER_VALIDATION_ERROR(InvalidCartan);
SPRINGER_VALIDATION_ERROR(UnsupportedCharacteristic);
SPRINGER_VALIDATION_ERROR(NotDominant);
SPRINGER_VALIDATION_ERROR(NotInLattice);
SPRINGER_VALIDATION_ERROR(InvalidTorusElement);
SPRINGER_VALIDATION_ERROR(InvalidParabolic);
SPRINGER_VALIDATION_ERROR(NegativeC);
SPRINGER_VALIDATION_ERROR(NotUnimodular);
SPRINGER_VALIDATION_ERROR(LengthBound);
SPRINGER_VALIDATION_ERROR(UnsupportedType);
SPRINGER_VALIDATION_ERROR(CharDividesWeylOrder);
SPRINGER_VALIDATION_ERROR(BadInput);

#undef SPRINGER_MATH_ERROR
#undef SPRINGER_VALIDATION_ERROR

}  // namespace springer

#endif
