#ifndef SPRINGER_LAURENT_HPP
#define SPRINGER_LAURENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "springer/field.hpp"

namespace springer {

struct RootDatum;

// Process-wide default O(t^N) marker used when constructing series from text
// or inverting exact polynomials.  The CLI threads --prec through this.
long default_precision();
void set_default_precision(long prec);

// Valuation of a series: a finite integer or +infinity (exact zero).
struct Val {
  long v = 0;
  bool infinite = false;
  static Val finite(long x) { return {x, false}; }
  static Val inf() { return {0, true}; }
  bool operator==(const Val& o) const {
    return infinite == o.infinite && (infinite || v == o.v);
  }
  long finite_or_throw() const;
};

// Truncated Laurent series over Q or F_p with an absolute precision marker:
//   c_0 t^{lowest} + c_1 t^{lowest+1} + ... + O(t^{precision}).
//
// Normal form: the leading and trailing stored coefficients are nonzero and
// lowest + #coeffs <= precision.  Two degenerate shapes are allowed:
//   - exact zero:            no coefficients, exact() == true
//   - zero up to precision:  no coefficients, finite precision
// Exact values (polynomials with no O-marker) are supported; arithmetic
// propagates precision by the usual interval rules.
class LaurentSeries {
public:
  LaurentSeries() : fld_(CoefficientField::rationals()), lowest_(0), exact_(true) {}

  static LaurentSeries zero(CoefficientField f = CoefficientField::rationals());
  static LaurentSeries zero_mod(CoefficientField f, long precision);
  static LaurentSeries one(CoefficientField f = CoefficientField::rationals());
  static LaurentSeries monomial(CoefficientField f, long exponent, long coeff = 1);
  static LaurentSeries constant(CoefficientField f, const FieldElem& c);
  // coeffs[i] multiplies t^{lowest+i}; pass precision < 0 for an exact value.
  static LaurentSeries make(CoefficientField f, long lowest,
                            std::vector<FieldElem> coeffs, long precision,
                            bool exact = false);

  const CoefficientField& field() const { return fld_; }
  bool exact() const { return exact_; }
  long precision() const;  // only valid when !exact()
  bool is_exact_zero() const { return exact_ && coeffs_.empty(); }
  bool is_zero_up_to_precision() const { return coeffs_.empty(); }
  long lowest() const { return lowest_; }
  const std::vector<FieldElem>& coeffs() const { return coeffs_; }
  FieldElem coeff_at(long exponent) const;

  // Three-way valuation: finite, +infinity (exact zero), or nullopt when all
  // stored coefficients vanish but the series is not the exact zero literal.
  std::optional<Val> try_valuation() const;

  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-(const LaurentSeries& o) const;
  LaurentSeries operator-() const;
  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries inverse() const;  // throws NonUnitEntry / InsufficientPrecision
  LaurentSeries pow(long e) const;
  LaurentSeries shifted(long k) const;  // multiply by t^k
  LaurentSeries truncated(long precision) const;
  LaurentSeries reduced_mod(CoefficientField prime_field) const;

  bool operator==(const LaurentSeries& o) const;
  bool operator!=(const LaurentSeries& o) const { return !(*this == o); }

  // Text form `t^{-1} + 2 + 3*t + O(t^5)`; parse/print round-trips bit-exactly.
  std::string str() const;
  static LaurentSeries parse(const std::string& text,
                             CoefficientField f = CoefficientField::rationals());

private:
  void normalize();
  CoefficientField fld_;
  long lowest_;
  std::vector<FieldElem> coeffs_;
  long prec_ = 0;
  bool exact_;
};

// Valuation per the spec contract: exact zero -> +infinity; all-stored-zero
// but not the exact zero literal -> InsufficientPrecision.
Val valuation(const LaurentSeries& s);

// Evaluate a character chi in X^* on a torus element given by coordinate
// series: product of entries[i]^{chi[i]}.  Throws NonUnitEntry on an exact
// zero entry, InsufficientPrecision when an entry cannot be certified nonzero.
LaurentSeries char_eval(const RootDatum& d, const std::vector<long>& chi,
                        const std::vector<LaurentSeries>& torus_element);

}  // namespace springer

#endif
