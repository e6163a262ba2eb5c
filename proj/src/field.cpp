#include "springer/field.hpp"

#include <sstream>

namespace springer {

namespace {
bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long mod_pos(long a, long p) {
  long r = a % p;
  return r < 0 ? r + p : r;
}

long mod_inverse(long a, long p) {
  // extended Euclid; a nonzero mod p
  long t = 0, new_t = 1, r = p, new_r = mod_pos(a, p);
  while (new_r != 0) {
    long q = r / new_r;
    long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw NonUnitEntry("element not invertible mod p");
  return mod_pos(t, p);
}
}  // namespace

CoefficientField CoefficientField::prime(long p) {
  if (!is_prime(p)) throw BadInput("field characteristic must be prime");
  return {Kind::Prime, p};
}

std::string CoefficientField::label() const {
  if (kind == Kind::Rationals) return "Q";
  return "F" + std::to_string(p);
}

CoefficientField CoefficientField::parse(const std::string& label) {
  if (label == "Q" || label == "q") return rationals();
  if (!label.empty() && (label[0] == 'F' || label[0] == 'f'))
    return prime(std::stol(label.substr(1)));
  throw BadInput("unknown field label: " + label);
}

FieldElem::FieldElem(CoefficientField f, long value) : fld_(f), n_(0) {
  if (fld_.is_prime_field())
    n_ = mod_pos(value, fld_.p);
  else
    q_ = value;
}

FieldElem::FieldElem(CoefficientField f, const mpq_class& value) : fld_(f), n_(0) {
  if (fld_.is_prime_field()) {
    mpz_class num = value.get_num(), den = value.get_den();
    long nn = mpz_fdiv_ui(num.get_mpz_t(), fld_.p);
    long dd = mpz_fdiv_ui(den.get_mpz_t(), fld_.p);
    n_ = mod_pos(nn * mod_inverse(dd, fld_.p), fld_.p);
  } else {
    q_ = value;
    q_.canonicalize();
  }
}

void FieldElem::check_same(const FieldElem& o) const {
  if (!(fld_ == o.fld_)) throw BadInput("mixing elements of different fields");
}

bool FieldElem::is_zero() const {
  return fld_.is_prime_field() ? n_ == 0 : q_ == 0;
}

bool FieldElem::is_one() const {
  return fld_.is_prime_field() ? n_ == 1 : q_ == 1;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same(o);
  if (fld_.is_prime_field()) return FieldElem(fld_, n_ + o.n_);
  return FieldElem(fld_, mpq_class(q_ + o.q_));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same(o);
  if (fld_.is_prime_field()) return FieldElem(fld_, n_ - o.n_);
  return FieldElem(fld_, mpq_class(q_ - o.q_));
}

FieldElem FieldElem::operator-() const {
  if (fld_.is_prime_field()) return FieldElem(fld_, -n_);
  return FieldElem(fld_, mpq_class(-q_));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same(o);
  if (fld_.is_prime_field()) return FieldElem(fld_, n_ * o.n_);
  return FieldElem(fld_, mpq_class(q_ * o.q_));
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw NonUnitEntry("division by zero field element");
  if (fld_.is_prime_field()) return FieldElem(fld_, mod_inverse(n_, fld_.p));
  return FieldElem(fld_, mpq_class(1 / q_));
}

bool FieldElem::operator==(const FieldElem& o) const {
  check_same(o);
  return fld_.is_prime_field() ? n_ == o.n_ : q_ == o.q_;
}

FieldElem FieldElem::pow(long e) const {
  if (e == 0) return one(fld_);
  FieldElem base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? -(unsigned long)e : (unsigned long)e;
  FieldElem acc = one(fld_);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::string FieldElem::str() const {
  if (fld_.is_prime_field()) return std::to_string(n_);
  std::ostringstream os;
  os << q_;
  return os.str();
}

FieldElem FieldElem::parse(CoefficientField f, const std::string& text) {
  try {
    return FieldElem(f, mpq_class(text));
  } catch (const std::invalid_argument&) {
    throw BadInput("bad coefficient literal: " + text);
  }
}

const mpq_class& FieldElem::rational() const {
  if (fld_.is_prime_field())
    throw BadInput("rational() called on a prime-field element");
  return q_;
}

}  // namespace springer
