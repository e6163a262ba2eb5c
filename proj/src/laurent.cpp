#include "springer/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "springer/root_data.hpp"

namespace springer {

namespace {
long g_default_precision = 16;
}

long default_precision() { return g_default_precision; }

void set_default_precision(long prec) {
  if (prec < 1) throw BadInput("precision must be positive");
  g_default_precision = prec;
}

long Val::finite_or_throw() const {
  if (infinite) throw BadInput("infinite valuation where finite expected");
  return v;
}

LaurentSeries LaurentSeries::zero(CoefficientField f) {
  LaurentSeries s;
  s.fld_ = f;
  s.exact_ = true;
  return s;
}

LaurentSeries LaurentSeries::zero_mod(CoefficientField f, long precision) {
  LaurentSeries s;
  s.fld_ = f;
  s.exact_ = false;
  s.prec_ = precision;
  s.lowest_ = precision;
  return s;
}

LaurentSeries LaurentSeries::one(CoefficientField f) { return monomial(f, 0, 1); }

LaurentSeries LaurentSeries::monomial(CoefficientField f, long exponent, long coeff) {
  LaurentSeries s;
  s.fld_ = f;
  s.lowest_ = exponent;
  s.exact_ = true;
  s.coeffs_.push_back(FieldElem(f, coeff));
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::constant(CoefficientField f, const FieldElem& c) {
  LaurentSeries s;
  s.fld_ = f;
  s.lowest_ = 0;
  s.exact_ = true;
  s.coeffs_.push_back(c);
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::make(CoefficientField f, long lowest,
                                  std::vector<FieldElem> coeffs, long precision,
                                  bool exact) {
  LaurentSeries s;
  s.fld_ = f;
  s.lowest_ = lowest;
  s.coeffs_ = std::move(coeffs);
  s.exact_ = exact;
  if (!exact) {
    s.prec_ = precision;
    if (lowest + static_cast<long>(s.coeffs_.size()) > precision)
      throw BadInput("series coefficients extend past the precision marker");
  }
  s.normalize();
  return s;
}

void LaurentSeries::normalize() {
  size_t a = 0, b = coeffs_.size();
  while (a < b && coeffs_[a].is_zero()) ++a;
  while (b > a && coeffs_[b - 1].is_zero()) --b;
  if (a > 0 || b < coeffs_.size()) {
    std::vector<FieldElem> trimmed(coeffs_.begin() + a, coeffs_.begin() + b);
    lowest_ += static_cast<long>(a);
    coeffs_ = std::move(trimmed);
  }
  if (coeffs_.empty() && !exact_) lowest_ = prec_;
}

long LaurentSeries::precision() const {
  if (exact_) throw BadInput("precision() called on an exact series");
  return prec_;
}

FieldElem LaurentSeries::coeff_at(long exponent) const {
  long i = exponent - lowest_;
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return FieldElem::zero(fld_);
  return coeffs_[i];
}

std::optional<Val> LaurentSeries::try_valuation() const {
  if (!coeffs_.empty()) return Val::finite(lowest_);
  if (exact_) return Val::inf();
  return std::nullopt;
}

Val valuation(const LaurentSeries& s) {
  auto v = s.try_valuation();
  if (!v)
    throw InsufficientPrecision(
        "all stored coefficients vanish below O(t^" +
        std::to_string(s.precision()) + "); valuation uncertified");
  return *v;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  if (!(fld_ == o.fld_)) throw BadInput("mixing series over different fields");
  LaurentSeries r;
  r.fld_ = fld_;
  r.exact_ = exact_ && o.exact_;
  if (!r.exact_) {
    if (exact_)
      r.prec_ = o.prec_;
    else if (o.exact_)
      r.prec_ = prec_;
    else
      r.prec_ = std::min(prec_, o.prec_);
  }
  if (coeffs_.empty() && o.coeffs_.empty()) {
    r.lowest_ = r.exact_ ? 0 : r.prec_;
    return r;
  }
  long lo = coeffs_.empty() ? o.lowest_ : (o.coeffs_.empty() ? lowest_ : std::min(lowest_, o.lowest_));
  long hi_a = lowest_ + static_cast<long>(coeffs_.size());
  long hi_b = o.lowest_ + static_cast<long>(o.coeffs_.size());
  long hi = std::max(coeffs_.empty() ? lo : hi_a, o.coeffs_.empty() ? lo : hi_b);
  if (!r.exact_) hi = std::min(hi, r.prec_);
  if (hi <= lo) {
    r.lowest_ = r.exact_ ? 0 : r.prec_;
    return r;
  }
  r.lowest_ = lo;
  r.coeffs_.reserve(hi - lo);
  for (long e = lo; e < hi; ++e) r.coeffs_.push_back(coeff_at(e) + o.coeff_at(e));
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const {
  return *this + (-o);
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  if (!(fld_ == o.fld_)) throw BadInput("mixing series over different fields");
  LaurentSeries r;
  r.fld_ = fld_;
  // Exact zero annihilates regardless of the other operand's precision.
  if (is_exact_zero() || o.is_exact_zero()) {
    r.exact_ = true;
    return r;
  }
  r.exact_ = exact_ && o.exact_;
  if (!r.exact_) {
    // val(this) >= lowest_ even when no coefficients are stored.
    long cand = 0;
    bool have = false;
    if (!o.exact_) {
      cand = lowest_ + o.prec_;
      have = true;
    }
    if (!exact_) {
      long c2 = o.lowest_ + prec_;
      cand = have ? std::min(cand, c2) : c2;
    }
    r.prec_ = cand;
  }
  if (coeffs_.empty() || o.coeffs_.empty()) {
    r.lowest_ = r.exact_ ? 0 : r.prec_;
    return r;
  }
  long lo = lowest_ + o.lowest_;
  long hi = lo + static_cast<long>(coeffs_.size() + o.coeffs_.size()) - 1;
  if (!r.exact_) hi = std::min(hi, r.prec_);
  if (hi <= lo) {
    r.lowest_ = r.exact_ ? 0 : r.prec_;
    return r;
  }
  r.lowest_ = lo;
  r.coeffs_.assign(hi - lo, FieldElem::zero(fld_));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    long base = lowest_ + static_cast<long>(i) + o.lowest_ - lo;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      long k = base + static_cast<long>(j);
      if (k >= static_cast<long>(r.coeffs_.size())) break;
      r.coeffs_[k] = r.coeffs_[k] + coeffs_[i] * o.coeffs_[j];
    }
  }
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::inverse() const {
  if (is_exact_zero()) throw NonUnitEntry("cannot invert the zero series");
  if (coeffs_.empty())
    throw InsufficientPrecision("cannot invert a series that vanishes up to precision");
  long v = lowest_;
  // Monomials invert exactly.
  if (exact_ && coeffs_.size() == 1) {
    LaurentSeries r;
    r.fld_ = fld_;
    r.exact_ = true;
    r.lowest_ = -v;
    r.coeffs_.push_back(coeffs_[0].inverse());
    return r;
  }
  // A known mod O(t^p) determines 1/A mod O(t^{p-2v}); exact non-monomial
  // inputs get a default-precision window of coefficients.
  long result_prec = exact_ ? -v + default_precision() : prec_ - 2 * v;
  long terms = result_prec - (-v);
  LaurentSeries r;
  r.fld_ = fld_;
  r.exact_ = false;
  r.prec_ = result_prec;
  if (terms <= 0) {
    r.lowest_ = r.prec_;
    return r;
  }
  // Solve (sum a_i t^i)(sum b_j t^j) = 1 coefficient by coefficient.
  std::vector<FieldElem> b(terms, FieldElem::zero(fld_));
  FieldElem a0inv = coeffs_[0].inverse();
  b[0] = a0inv;
  for (long k = 1; k < terms; ++k) {
    FieldElem acc = FieldElem::zero(fld_);
    for (long i = 1; i <= k && i < static_cast<long>(coeffs_.size()); ++i)
      acc = acc + coeffs_[i] * b[k - i];
    b[k] = -(acc * a0inv);
  }
  r.lowest_ = -v;
  r.coeffs_ = std::move(b);
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::pow(long e) const {
  if (e == 0) return one(fld_);
  LaurentSeries base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? -(unsigned long)e : (unsigned long)e;
  LaurentSeries acc = one(fld_);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

LaurentSeries LaurentSeries::shifted(long k) const {
  LaurentSeries r = *this;
  r.lowest_ += k;
  if (!r.exact_) r.prec_ += k;
  return r;
}

LaurentSeries LaurentSeries::truncated(long precision) const {
  LaurentSeries r = *this;
  if (!r.exact_ && r.prec_ <= precision) return r;
  r.exact_ = false;
  r.prec_ = precision;
  long keep = precision - r.lowest_;
  if (keep < 0) keep = 0;
  if (keep < static_cast<long>(r.coeffs_.size())) r.coeffs_.resize(keep);
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::reduced_mod(CoefficientField prime_field) const {
  if (!prime_field.is_prime_field()) throw BadInput("reduced_mod needs a prime field");
  LaurentSeries r;
  r.fld_ = prime_field;
  r.exact_ = exact_;
  r.prec_ = prec_;
  r.lowest_ = lowest_;
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(FieldElem(prime_field, c.rational()));
  r.normalize();
  return r;
}

bool LaurentSeries::operator==(const LaurentSeries& o) const {
  if (!(fld_ == o.fld_) || exact_ != o.exact_) return false;
  if (!exact_ && prec_ != o.prec_) return false;
  if (coeffs_.size() != o.coeffs_.size()) return false;
  if (!coeffs_.empty() && lowest_ != o.lowest_) return false;
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != o.coeffs_[i]) return false;
  return true;
}

namespace {
std::string exp_str(long e) {
  if (e < 0) return "{" + std::to_string(e) + "}";
  return std::to_string(e);
}

std::string term_str(const FieldElem& c, long e, bool leading) {
  std::string cs = c.str();
  bool neg = !cs.empty() && cs[0] == '-';
  std::string mag = neg ? cs.substr(1) : cs;
  std::string body;
  if (e == 0)
    body = mag;
  else {
    std::string tpart = (e == 1) ? "t" : "t^" + exp_str(e);
    body = (mag == "1") ? tpart : mag + "*" + tpart;
  }
  if (leading) return neg ? "-" + body : body;
  return (neg ? " - " : " + ") + body;
}
}  // namespace

std::string LaurentSeries::str() const {
  std::string out;
  bool leading = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    out += term_str(coeffs_[i], lowest_ + static_cast<long>(i), leading);
    leading = false;
  }
  if (!exact_) {
    std::string om = "O(t^" + exp_str(prec_) + ")";
    out += leading ? om : " + " + om;
  } else if (leading) {
    out = "0";
  }
  return out;
}

namespace {
struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool peek(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
};

long parse_long(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) ++c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) throw BadInput("expected integer in series literal");
  return std::stol(c.s.substr(start, c.i - start));
}

long parse_exponent(Cursor& c) {
  if (c.eat('{')) {
    long e = parse_long(c);
    if (!c.eat('}')) throw BadInput("unterminated exponent brace");
    return e;
  }
  return parse_long(c);
}

std::string parse_number(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) ++c.i;
  while (c.i < c.s.size() &&
         (std::isdigit(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '/'))
    ++c.i;
  if (c.i == start) throw BadInput("expected coefficient in series literal");
  return c.s.substr(start, c.i - start);
}
}  // namespace

LaurentSeries LaurentSeries::parse(const std::string& text, CoefficientField f) {
  Cursor c{text};
  std::vector<std::pair<long, FieldElem>> terms;
  bool exact = true;
  long prec = 0;
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    if (!first) {
      if (c.eat('+'))
        sign = 1;
      else if (c.eat('-'))
        sign = -1;
      else
        throw BadInput("expected '+' or '-' between series terms");
    } else if (c.eat('-')) {
      sign = -1;
    }
    first = false;
    c.skip_ws();
    // O(t^N) marker
    if (c.peek('O')) {
      ++c.i;
      if (!c.eat('(')) throw BadInput("malformed O() marker");
      if (!c.eat('t')) throw BadInput("malformed O() marker");
      if (!c.eat('^')) throw BadInput("malformed O() marker");
      prec = parse_exponent(c);
      if (!c.eat(')')) throw BadInput("malformed O() marker");
      exact = false;
      if (!c.done()) throw BadInput("O() marker must end the series literal");
      break;
    }
    FieldElem coeff = FieldElem::one(f);
    long e = 0;
    if (c.peek('t')) {
      ++c.i;
      e = c.eat('^') ? parse_exponent(c) : 1;
    } else {
      coeff = FieldElem::parse(f, parse_number(c));
      c.skip_ws();
      if (c.eat('*')) {
        if (!c.eat('t')) throw BadInput("expected t after '*'");
        e = c.eat('^') ? parse_exponent(c) : 1;
      }
    }
    if (sign < 0) coeff = -coeff;
    if (!coeff.is_zero()) terms.push_back({e, coeff});
  }
  if (terms.empty()) {
    return exact ? LaurentSeries::zero(f) : LaurentSeries::zero_mod(f, prec);
  }
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  long lo = terms.front().first, hi = terms.back().first;
  std::vector<FieldElem> coeffs(hi - lo + 1, FieldElem::zero(f));
  for (auto& [e, v] : terms) {
    coeffs[e - lo] = coeffs[e - lo] + v;
  }
  if (!exact && hi >= prec)
    throw BadInput("series term at or above its O() marker");
  return LaurentSeries::make(f, lo, std::move(coeffs), prec, exact);
}

LaurentSeries char_eval(const RootDatum& d, const std::vector<long>& chi,
                        const std::vector<LaurentSeries>& torus_element) {
  if (chi.size() != static_cast<size_t>(d.weight_lattice_rank()))
    throw BadInput("character length does not match the weight lattice rank");
  if (torus_element.size() != static_cast<size_t>(d.weight_lattice_rank()))
    throw BadInput("torus element length does not match the weight lattice rank");
  CoefficientField f = torus_element.empty() ? CoefficientField::rationals()
                                             : torus_element.front().field();
  LaurentSeries acc = LaurentSeries::one(f);
  for (size_t i = 0; i < chi.size(); ++i) {
    if (chi[i] == 0) continue;
    const LaurentSeries& e = torus_element[i];
    if (e.is_exact_zero()) throw NonUnitEntry("torus coordinate is exactly zero");
    if (e.is_zero_up_to_precision())
      throw InsufficientPrecision("torus coordinate vanishes up to precision");
    acc = acc * e.pow(chi[i]);
  }
  return acc;
}

}  // namespace springer
