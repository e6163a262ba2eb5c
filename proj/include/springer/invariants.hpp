#ifndef SPRINGER_INVARIANTS_HPP
#define SPRINGER_INVARIANTS_HPP

#include <optional>
#include <vector>

#include "springer/laurent.hpp"
#include "springer/root_data.hpp"

namespace springer {

// Split regular semisimple element gamma = t^mu * u of T(F): the coweight mu
// and the torus coordinates of the unit u in T(O).  Construction validates
// lattice membership, unit valuations, the defining equations of T inside the
// ambient torus, and regularity up to precision.
class SplitElement {
public:
  SplitElement(RootDatumPtr d, Coweight mu, std::vector<LaurentSeries> units);

  const RootDatumPtr& datum() const { return datum_; }
  const Coweight& mu() const { return mu_; }
  const std::vector<LaurentSeries>& units() const { return units_; }
  CoefficientField field() const;

  // alpha(gamma) = t^{<alpha,mu>} * u^alpha for a character alpha.
  LaurentSeries character_value(const IntVec& alpha) const;

private:
  RootDatumPtr datum_;
  Coweight mu_;
  std::vector<LaurentSeries> units_;
};

// Invariant bundle for elements the library cannot inspect (ramified gamma):
// the Newton point, a lattice representative of the Kottwitz class, and the
// d, c invariants, supplied by the caller and passed through.
struct ExplicitInvariants {
  RatVec newton;        // rational dominant coweight
  Coweight kappa_rep;   // any coweight in the Kottwitz class
  long d = 0;
  long c = 0;
};

enum class Variant { Open, Closed };
enum class Level { Spherical, Iwahori };

class FiberQuery {
public:
  FiberQuery(SplitElement gamma, Coweight lambda, Level level = Level::Spherical,
             Variant variant = Variant::Closed);
  FiberQuery(RootDatumPtr d, ExplicitInvariants inv, Coweight lambda,
             Level level = Level::Spherical, Variant variant = Variant::Closed);

  const RootDatumPtr& datum() const { return datum_; }
  const Coweight& lambda() const { return lambda_; }
  Level level() const { return level_; }
  Variant variant() const { return variant_; }
  const std::optional<SplitElement>& split_gamma() const { return gamma_; }

  RatVec newton() const;
  Pi1Class kottwitz() const;
  long d_invariant() const;
  long c_invariant() const;

private:
  RootDatumPtr datum_;
  std::optional<SplitElement> gamma_;
  std::optional<ExplicitInvariants> explicit_;
  Coweight lambda_;
  Level level_;
  Variant variant_;
};

// --- operations ---------------------------------------------------------------

Coweight newton_point(const SplitElement& gamma);
Pi1Class kottwitz_class(const SplitElement& gamma);

// kappa(gamma) = p(lambda) and newton <=_Q lambda; the verdict is shared by
// the open/closed variants and the spherical/iwahori levels.
bool nonempty(const FiberQuery& q);

// d(gamma) = sum over all roots of val(1 - alpha(gamma)); may be negative.
long discriminant_valuation(const SplitElement& gamma);

// d_+ = <2rho, lambda> + d(gamma); requires a non-empty query and is then
// guaranteed nonnegative.
long extended_discriminant_valuation(const FiberQuery& q);

long c_invariant(const SplitElement& gamma);
long c_invariant_explicit(long c);

// dim = <rho,lambda> + (d - c)/2, identical across variants and levels.
mpq_class dim_fiber(const FiberQuery& q);

// <lambda+mu, rho> - dim(G/P_lambda) + l(w^lambda) with w^lambda the
// minimal-length representative of w W_lambda.
mpq_class mv_dimension(const RootDatum& d, const Coweight& lambda, const Coweight& mu,
                       const WeylElement& w);

// Root set of the unipotent radical of a parabolic containing T: some
// w(Phi^+ \ Phi_J^+).  Validated; then r_N = sum val(1 - beta(gamma)).
long r_N_valuation(const SplitElement& gamma, const std::vector<IntVec>& n_roots);

bool is_valid_parabolic_radical(const RootDatum& d, const std::vector<IntVec>& n_roots);

}  // namespace springer

#endif
