#ifndef SPRINGER_AFFINE_WEYL_HPP
#define SPRINGER_AFFINE_WEYL_HPP

#include <string>
#include <vector>

#include "springer/root_data.hpp"

namespace springer {

// Element t^mu * w of the extended affine Weyl group W~ = W x| X_*(T), with
// the product law (t^a u)(t^b v) = t^{a + u(b)} uv.  The Iwahori here is the
// preimage of the upper-triangular Borel, so the base alcove lies in the
// antidominant chamber and the affine node of a component with highest root
// theta is s0 = t^{-theta^vee} s_theta.
class AffineWeylElement {
public:
  AffineWeylElement() = default;
  AffineWeylElement(RootDatumPtr d, Coweight translation, WeylElement finite);
  static AffineWeylElement identity(const RootDatumPtr& d);
  static AffineWeylElement translation(const RootDatumPtr& d, const Coweight& mu);

  const RootDatumPtr& datum() const { return datum_; }
  const Coweight& translation_part() const { return translation_; }
  const WeylElement& finite_part() const { return finite_; }

  AffineWeylElement operator*(const AffineWeylElement& o) const;
  AffineWeylElement inverse() const;
  bool operator==(const AffineWeylElement& o) const;
  bool operator!=(const AffineWeylElement& o) const { return !(*this == o); }
  bool operator<(const AffineWeylElement& o) const;

  bool is_identity() const;
  bool is_translation() const { return finite_.is_identity(); }

  Pi1Class omega_class() const;

  // Text form `t^[1,0]*s1`, `s1*s2`, `t^[0,1]`, or `e`.
  std::string str() const;
  static AffineWeylElement parse(const RootDatumPtr& d, const std::string& text);

private:
  RootDatumPtr datum_;
  Coweight translation_;
  WeylElement finite_;
};

// Affine simple reflections, numbered 0..m: index 0 is the affine node of the
// first irreducible component, 1..r are the finite simple reflections
// s_1..s_r, and any further components contribute affine nodes r+1, r+2, ...
int num_affine_generators(const RootDatum& d);
AffineWeylElement affine_generator(const RootDatumPtr& d, int idx);
// All affine generators in index order, cached per datum.
const std::vector<AffineWeylElement>& affine_generators(const RootDatumPtr& d);

AffineWeylElement aw_product(const AffineWeylElement& x, const AffineWeylElement& y);

// Iwahori-Matsumoto length adapted to the antidominant base alcove:
//   l(t^mu w) = sum_{a>0, w^{-1}a>0} |<a,mu>| + sum_{a>0, w^{-1}a<0} |<a,mu>+1|.
long aw_length(const AffineWeylElement& x);

struct ReducedWord {
  AffineWeylElement omega;    // length-zero component
  std::vector<int> letters;   // affine generator indices; x = omega * prod
};
ReducedWord aw_reduced_word(const AffineWeylElement& x);

// Bruhat order on W~: false across distinct Omega cosets, the lifting
// recursion within one.
bool bruhat_leq(const AffineWeylElement& x, const AffineWeylElement& y);

// {t^{x(lambda)} : x in W}, deduplicated.  Throws NotDominant.
std::vector<AffineWeylElement> adm_maximal(const RootDatumPtr& d, const Coweight& lambda);

// Adm(lambda) = { w in W~ : w <= t^{x(lambda)} for some x in W }, materialized
// by subword closure of one reduced word per maximal element; sorted.
std::vector<AffineWeylElement> admissible_set(const RootDatumPtr& d, const Coweight& lambda);

// { mu dominant : mu <= lambda in dominance, equal pi1 class }, sorted.
std::vector<Coweight> double_coset_support(const RootDatumPtr& d, const Coweight& lambda);

}  // namespace springer

#endif
