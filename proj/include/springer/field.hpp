#ifndef SPRINGER_FIELD_HPP
#define SPRINGER_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "springer/errors.hpp"

namespace springer {

// Coefficient field: exact rationals or a prime field F_p.  The compatibility
// requirement that p does not divide |W| is checked where a field meets a
// root datum (census entry points), not here.
struct CoefficientField {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Rationals;
  long p = 0;  // only for Kind::Prime

  static CoefficientField rationals() { return {Kind::Rationals, 0}; }
  static CoefficientField prime(long p);

  bool is_prime_field() const { return kind == Kind::Prime; }
  bool operator==(const CoefficientField& o) const {
    return kind == o.kind && p == o.p;
  }
  std::string label() const;  // "Q" or "F<p>"
  static CoefficientField parse(const std::string& label);
};

// One field element.  Rational values live in `q`; prime-field values are
// kept reduced in [0, p) in `n`.
class FieldElem {
public:
  FieldElem() : fld_(CoefficientField::rationals()), n_(0) {}
  FieldElem(CoefficientField f, long value);
  FieldElem(CoefficientField f, const mpq_class& value);

  static FieldElem zero(CoefficientField f) { return FieldElem(f, 0); }
  static FieldElem one(CoefficientField f) { return FieldElem(f, 1); }

  const CoefficientField& field() const { return fld_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem inverse() const;  // throws NonUnitEntry on zero
  FieldElem operator/(const FieldElem& o) const { return *this * o.inverse(); }
  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  FieldElem pow(long e) const;

  // For rationals prints "num" or "num/den"; for F_p the reduced residue.
  std::string str() const;
  static FieldElem parse(CoefficientField f, const std::string& text);

  // Rational value (only valid for the rational field).
  const mpq_class& rational() const;
  long residue() const { return n_; }

private:
  void check_same(const FieldElem& o) const;
  CoefficientField fld_;
  long n_;       // prime-field residue
  mpq_class q_;  // rational value
};

}  // namespace springer

#endif
