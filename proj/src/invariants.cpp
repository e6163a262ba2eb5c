#include "springer/invariants.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace springer {

SplitElement::SplitElement(RootDatumPtr d, Coweight mu, std::vector<LaurentSeries> units)
    : datum_(std::move(d)), mu_(std::move(mu)), units_(std::move(units)) {
  datum_->require_coweight(mu_);
  if (units_.size() != static_cast<size_t>(datum_->weight_lattice_rank()))
    throw InvalidTorusElement("unit part has the wrong number of coordinates");
  for (const auto& u : units_) {
    auto v = u.try_valuation();
    if (!v) throw InsufficientPrecision("unit coordinate vanishes up to precision");
    if (v->infinite || v->v != 0)
      throw InvalidTorusElement("unit coordinate must have valuation 0");
  }
  for (size_t i = 1; i < units_.size(); ++i)
    if (!(units_[i].field() == units_[0].field()))
      throw InvalidTorusElement("unit coordinates over different fields");
  // the defining characters of T must evaluate to 1 on the unit part
  for (const auto& rel : datum_->torus_relations()) {
    LaurentSeries v = char_eval(*datum_, rel, units_) - LaurentSeries::one(field());
    if (!v.is_zero_up_to_precision())
      throw InvalidTorusElement("unit part does not satisfy the torus relations");
  }
  // regular semisimple: alpha(gamma) != 1 for every root, up to precision
  for (const auto& a : datum_->positive_roots()) {
    LaurentSeries av = character_value(a);
    LaurentSeries diff = av - LaurentSeries::one(field());
    if (diff.is_zero_up_to_precision())
      throw NotRegular("alpha(gamma) = 1 up to precision for a root alpha");
  }
}

CoefficientField SplitElement::field() const {
  return units_.empty() ? CoefficientField::rationals() : units_[0].field();
}

LaurentSeries SplitElement::character_value(const IntVec& alpha) const {
  long shift = dot(alpha, mu_);
  return char_eval(*datum_, alpha, units_).shifted(shift);
}

FiberQuery::FiberQuery(SplitElement gamma, Coweight lambda, Level level, Variant variant)
    : datum_(gamma.datum()),
      gamma_(std::move(gamma)),
      lambda_(std::move(lambda)),
      level_(level),
      variant_(variant) {
  datum_->require_coweight(lambda_);
  if (!datum_->is_dominant(lambda_)) throw NotDominant("lambda must be dominant");
}

FiberQuery::FiberQuery(RootDatumPtr d, ExplicitInvariants inv, Coweight lambda,
                       Level level, Variant variant)
    : datum_(std::move(d)),
      explicit_(std::move(inv)),
      lambda_(std::move(lambda)),
      level_(level),
      variant_(variant) {
  datum_->require_coweight(lambda_);
  if (!datum_->is_dominant(lambda_)) throw NotDominant("lambda must be dominant");
  if (explicit_->c < 0) throw NegativeC("c(gamma) must be nonnegative");
  if (explicit_->newton.size() != static_cast<size_t>(datum_->weight_lattice_rank()))
    throw BadInput("Newton point has the wrong dimension");
  for (const auto& a : datum_->simple_roots()) {
    mpq_class p = 0;
    for (int k = 0; k < datum_->weight_lattice_rank(); ++k)
      p += a[k] * explicit_->newton[k];
    if (p < 0) throw NotDominant("explicit Newton point must be dominant");
  }
  datum_->require_coweight(explicit_->kappa_rep);
}

RatVec FiberQuery::newton() const {
  if (gamma_) {
    Coweight nu = newton_point(*gamma_);
    RatVec out(nu.size());
    for (size_t i = 0; i < nu.size(); ++i) out[i] = nu[i];
    return out;
  }
  return explicit_->newton;
}

Pi1Class FiberQuery::kottwitz() const {
  if (gamma_) return kottwitz_class(*gamma_);
  return pi1_class(*datum_, explicit_->kappa_rep);
}

long FiberQuery::d_invariant() const {
  if (gamma_) return discriminant_valuation(*gamma_);
  return explicit_->d;
}

long FiberQuery::c_invariant() const {
  if (gamma_) return 0;
  return explicit_->c;
}

Coweight newton_point(const SplitElement& gamma) {
  return dominant_conjugate(*gamma.datum(), gamma.mu()).first;
}

Pi1Class kottwitz_class(const SplitElement& gamma) {
  return pi1_class(*gamma.datum(), gamma.mu());
}

bool nonempty(const FiberQuery& q) {
  if (q.kottwitz() != pi1_class(*q.datum(), q.lambda())) return false;
  RatVec lam(q.lambda().size());
  for (size_t i = 0; i < lam.size(); ++i) lam[i] = q.lambda()[i];
  return rational_cone_leq(*q.datum(), q.newton(), lam);
}

long discriminant_valuation(const SplitElement& gamma) {
  const RootDatum& d = *gamma.datum();
  long total = 0;
  for (const auto& a : d.positive_roots()) {
    for (const IntVec& alpha : {a, vec_neg(a)}) {
      LaurentSeries diff = LaurentSeries::one(gamma.field()) - gamma.character_value(alpha);
      auto v = diff.try_valuation();
      if (!v)
        throw InsufficientPrecision("1 - alpha(gamma) vanishes up to precision");
      if (v->infinite) throw NotRegular("alpha(gamma) = 1 exactly");
      total += v->v;
    }
  }
  return total;
}

long extended_discriminant_valuation(const FiberQuery& q) {
  if (!nonempty(q)) throw EmptyFiber("extended discriminant of an empty fiber");
  long d_plus = dot(q.datum()->two_rho(), q.lambda()) + q.d_invariant();
  if (d_plus < 0)
    throw BadInput("negative extended discriminant; inconsistent invariant bundle");
  return d_plus;
}

long c_invariant(const SplitElement&) { return 0; }

long c_invariant_explicit(long c) {
  if (c < 0) throw NegativeC("c(gamma) must be nonnegative");
  return c;
}

mpq_class dim_fiber(const FiberQuery& q) {
  if (!nonempty(q)) throw EmptyFiber("dimension of an empty fiber");
  mpq_class dim(dot(q.datum()->two_rho(), q.lambda()) + q.d_invariant() - q.c_invariant(), 2);
  dim.canonicalize();
  if (dim.get_den() != 1 || dim < 0) {
    std::ostringstream os;
    os << "dimension " << dim << " is not a nonnegative integer; inconsistent invariants";
    throw NonIntegralDimension(os.str());
  }
  return dim;
}

mpq_class mv_dimension(const RootDatum& d, const Coweight& lambda, const Coweight& mu,
                       const WeylElement& w) {
  d.require_coweight(lambda);
  if (!d.is_dominant(lambda)) throw NotDominant("mv_dimension needs dominant lambda");
  mpq_class val = d.rho_pairing(vec_add(lambda, mu));
  val -= dim_g_mod_p(d, lambda);
  val += min_coset_rep(w, lambda).length();
  return val;
}

bool is_valid_parabolic_radical(const RootDatum& d, const std::vector<IntVec>& n_roots) {
  std::set<IntVec> target(n_roots.begin(), n_roots.end());
  if (target.size() != n_roots.size()) return false;
  int r = d.num_simple_roots();
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    // radical roots of the standard parabolic P_J: positive roots with
    // support not contained in J
    std::set<IntVec> radical;
    for (const auto& a : d.positive_roots()) {
      // the coefficient of a on alpha_i is <a, varpi_i^vee>; support inside J
      // means those coefficients vanish off J
      bool in_span = true;
      for (int i = 0; i < r && in_span; ++i) {
        if (mask & (1u << i)) continue;
        mpq_class coeff = 0;
        for (int k = 0; k < d.weight_lattice_rank(); ++k)
          coeff += a[k] * d.fundamental_coweights()[i][k];
        if (coeff != 0) in_span = false;
      }
      if (!in_span) radical.insert(a);
    }
    if (radical.size() != target.size()) continue;
    for (const auto& w : d.weyl_group()) {
      std::set<IntVec> image;
      for (const auto& a : radical) image.insert(w.apply_char(a));
      if (image == target) return true;
    }
  }
  return false;
}

long r_N_valuation(const SplitElement& gamma, const std::vector<IntVec>& n_roots) {
  const RootDatum& d = *gamma.datum();
  if (!is_valid_parabolic_radical(d, n_roots))
    throw InvalidParabolic("root set is not the radical of a parabolic containing T");
  long total = 0;
  for (const auto& beta : n_roots) {
    LaurentSeries diff = LaurentSeries::one(gamma.field()) - gamma.character_value(beta);
    auto v = diff.try_valuation();
    if (!v) throw InsufficientPrecision("1 - beta(gamma) vanishes up to precision");
    if (v->infinite) throw NotRegular("beta(gamma) = 1 exactly");
    total += v->v;
  }
  return total;
}

}  // namespace springer
