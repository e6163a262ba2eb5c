#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "springer/affine_weyl.hpp"

using namespace springer;

namespace {

// Alcove-walk length oracle, independent of the Iwahori-Matsumoto formula:
// the length of x is the number of affine hyperplanes <alpha,.> = k
// separating the base alcove from its image under x.  The base alcove is the
// antidominant one; v0 below is an interior point.
RatVec base_point(const RootDatum& d) {
  int n = d.weight_lattice_rank();
  RatVec sum_fw(n, 0);
  for (const auto& fw : d.fundamental_coweights())
    for (int k = 0; k < n; ++k) sum_fw[k] += fw[k];
  mpq_class hmax = 0;
  for (const auto& a : d.positive_roots()) {
    mpq_class h = 0;
    for (int k = 0; k < d.weight_lattice_rank(); ++k) h += a[k] * sum_fw[k];
    if (h > hmax) hmax = h;
  }
  mpq_class eps = mpq_class(1) / (hmax + 1);
  RatVec v0(n);
  for (int k = 0; k < n; ++k) v0[k] = -eps * sum_fw[k];
  return v0;
}

long integers_strictly_between(const mpq_class& a, const mpq_class& b) {
  mpq_class lo = std::min(a, b), hi = std::max(a, b);
  mpz_class lo_floor, hi_ceil;
  mpz_fdiv_q(lo_floor.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  mpz_cdiv_q(hi_ceil.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
  // count k with lo < k < hi
  mpz_class count = hi_ceil - 1 - lo_floor;
  return count > 0 ? count.get_si() : 0;
}

long alcove_length(const AffineWeylElement& x) {
  const RootDatum& d = *x.datum();
  RatVec v0 = base_point(d);
  int n = d.weight_lattice_rank();
  // image of v0 under t^mu w: w(v0) + mu
  RatVec img(n, 0);
  const IntMat& m = x.finite_part().matrix();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) img[i] += m[i][j] * v0[j];
    img[i] += x.translation_part()[i];
  }
  long total = 0;
  for (const auto& a : d.positive_roots()) {
    mpq_class c1 = 0, c2 = 0;
    for (int k = 0; k < n; ++k) {
      c1 += a[k] * v0[k];
      c2 += a[k] * img[k];
    }
    total += integers_strictly_between(c1, c2);
  }
  return total;
}

// All elements of length <= maxlen whose Omega class contains a translation
// with coordinates in [-seed_box, seed_box].
std::vector<AffineWeylElement> length_ball(const RootDatumPtr& d, long maxlen,
                                           long seed_box) {
  std::set<AffineWeylElement> seen;
  std::vector<AffineWeylElement> frontier;
  int n = d->weight_lattice_rank();
  std::vector<long> v(n, -seed_box);
  while (true) {
    if (d->in_coweight_lattice(v)) {
      for (const auto& w : d->weyl_group()) {
        AffineWeylElement x(d, v, w);
        if (aw_length(x) == 0 && !seen.count(x)) {
          seen.insert(x);
          frontier.push_back(x);
        }
      }
    }
    int i = 0;
    for (; i < n; ++i) {
      if (v[i] < seed_box) {
        ++v[i];
        break;
      }
      v[i] = -seed_box;
    }
    if (i == n) break;
  }
  for (long depth = 1; depth <= maxlen; ++depth) {
    std::vector<AffineWeylElement> next;
    for (const auto& x : frontier)
      for (const auto& s : affine_generators(d)) {
        AffineWeylElement y = x * s;
        if (aw_length(y) == depth && !seen.count(y)) {
          seen.insert(y);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return std::vector<AffineWeylElement>(seen.begin(), seen.end());
}

AffineWeylElement gl2_s_t10(const RootDatumPtr& gl2) {
  // s * t^{(1,0)} in (translation, finite) form
  AffineWeylElement s(gl2, {0, 0}, gl2->simple_reflection(0));
  return s * AffineWeylElement::translation(gl2, {1, 0});
}

}  // namespace

TEST_CASE("product law") {
  auto gl2 = RootDatum::preset("GL2");
  auto t10 = AffineWeylElement::translation(gl2, {1, 0});
  auto t01 = AffineWeylElement::translation(gl2, {0, 1});
  CHECK(aw_product(t10, t01) == AffineWeylElement::translation(gl2, {1, 1}));

  AffineWeylElement s(gl2, {0, 0}, gl2->simple_reflection(0));
  CHECK(aw_product(aw_product(s, t10), s) == t01);

  std::mt19937 rng(5);
  std::uniform_int_distribution<long> cd(-2, 2);
  std::uniform_int_distribution<int> wd(0, gl2->weyl_order() - 1);
  for (int i = 0; i < 50; ++i) {
    AffineWeylElement x(gl2, {cd(rng), cd(rng)}, gl2->element(wd(rng)));
    CHECK(aw_product(x, x.inverse()) == AffineWeylElement::identity(gl2));
    AffineWeylElement y(gl2, {cd(rng), cd(rng)}, gl2->element(wd(rng)));
    AffineWeylElement z(gl2, {cd(rng), cd(rng)}, gl2->element(wd(rng)));
    CHECK((x * y) * z == x * (y * z));
  }
}

TEST_CASE("length examples against the alcove oracle") {
  auto gl2 = RootDatum::preset("GL2");
  auto t10 = AffineWeylElement::translation(gl2, {1, 0});
  CHECK(aw_length(t10) == 1);
  CHECK(alcove_length(t10) == 1);
  CHECK(dot(gl2->two_rho(), Coweight{1, 0}) == 1);

  auto omega = gl2_s_t10(gl2);
  CHECK(aw_length(omega) == 0);
  CHECK(alcove_length(omega) == 0);

  auto sl2 = RootDatum::preset("SL2");
  auto t = AffineWeylElement::translation(sl2, {1, -1});
  CHECK(aw_length(t) == 2);
  CHECK(alcove_length(t) == 2);
}

TEST_CASE("IM length equals alcove length and reduced-word length, exhaustively") {
  for (const char* name : {"GL2", "SL2", "SL3"}) {
    auto d = RootDatum::preset(name);
    long maxlen = std::string(name) == "SL3" ? 4 : 6;
    for (const auto& x : length_ball(d, maxlen, 2)) {
      CHECK(aw_length(x) == alcove_length(x));
      ReducedWord rw = aw_reduced_word(x);
      CHECK(static_cast<long>(rw.letters.size()) == aw_length(x));
      CHECK(aw_length(rw.omega) == 0);
      AffineWeylElement acc = rw.omega;
      for (int g : rw.letters) acc = acc * affine_generator(d, g);
      CHECK(acc == x);
    }
  }
}

TEST_CASE("reduced word examples") {
  auto gl2 = RootDatum::preset("GL2");
  auto e = AffineWeylElement::identity(gl2);
  auto rw_e = aw_reduced_word(e);
  CHECK(rw_e.omega == e);
  CHECK(rw_e.letters.empty());

  auto t10 = AffineWeylElement::translation(gl2, {1, 0});
  auto rw = aw_reduced_word(t10);
  REQUIRE(rw.letters.size() == 1);
  CHECK((rw.letters[0] == 0 || rw.letters[0] == 1));
  CHECK(rw.omega * affine_generator(gl2, rw.letters[0]) == t10);

  auto sl2 = RootDatum::preset("SL2");
  auto t = AffineWeylElement::translation(sl2, {1, -1});
  auto rw2 = aw_reduced_word(t);
  REQUIRE(rw2.letters.size() == 2);
  AffineWeylElement acc = rw2.omega;
  for (int g : rw2.letters) acc = acc * affine_generator(sl2, g);
  CHECK(acc == t);
}

TEST_CASE("bruhat order examples") {
  auto gl2 = RootDatum::preset("GL2");
  auto t10 = AffineWeylElement::translation(gl2, {1, 0});
  auto t01 = AffineWeylElement::translation(gl2, {0, 1});
  CHECK(bruhat_leq(t10, t10));
  CHECK(bruhat_leq(gl2_s_t10(gl2), t10));
  CHECK_FALSE(bruhat_leq(t10, t01));
  CHECK_FALSE(bruhat_leq(t01, t10));
}

TEST_CASE("admissible set of GL2 (1,0) matches the known three elements") {
  auto gl2 = RootDatum::preset("GL2");
  auto adm = admissible_set(gl2, {1, 0});
  std::set<AffineWeylElement> got(adm.begin(), adm.end());
  std::set<AffineWeylElement> expect = {
      AffineWeylElement::translation(gl2, {1, 0}),
      AffineWeylElement::translation(gl2, {0, 1}),
      gl2_s_t10(gl2),
  };
  CHECK(got == expect);
}

TEST_CASE("admissible set edge cases") {
  auto gl2 = RootDatum::preset("GL2");
  auto adm0 = admissible_set(gl2, {0, 0});
  REQUIRE(adm0.size() == 1);
  CHECK(adm0[0] == AffineWeylElement::identity(gl2));

  CHECK_THROWS_AS(admissible_set(gl2, {0, 1}), NotDominant);

  auto sl2 = RootDatum::preset("SL2");
  auto adm = admissible_set(sl2, {1, -1});
  std::set<AffineWeylElement> got(adm.begin(), adm.end());
  std::set<AffineWeylElement> expect = {
      AffineWeylElement::identity(sl2),
      affine_generator(sl2, 0),
      affine_generator(sl2, 1),
      AffineWeylElement::translation(sl2, {1, -1}),
      AffineWeylElement::translation(sl2, {-1, 1}),
  };
  CHECK(got == expect);
}

TEST_CASE("adm_maximal") {
  auto gl2 = RootDatum::preset("GL2");
  auto mx = adm_maximal(gl2, {1, 0});
  REQUIRE(mx.size() == 2);
  for (const auto& m : mx) CHECK(aw_length(m) == 1);
  for (const auto& a : mx)
    for (const auto& b : mx)
      if (!(a == b)) CHECK_FALSE(bruhat_leq(a, b));

  auto mx0 = adm_maximal(gl2, {0, 0});
  REQUIRE(mx0.size() == 1);
  CHECK(mx0[0] == AffineWeylElement::identity(gl2));

  auto sl3 = RootDatum::preset("SL3");
  auto mx3 = adm_maximal(sl3, {1, 0, -1});
  CHECK(mx3.size() == 6);
  for (const auto& m : mx3)
    CHECK(aw_length(m) == dot(sl3->two_rho(), Coweight{1, 0, -1}));
  for (const auto& a : mx3)
    for (const auto& b : mx3)
      if (!(a == b)) CHECK_FALSE(bruhat_leq(a, b));
}

TEST_CASE("double coset support") {
  auto gl2 = RootDatum::preset("GL2");
  CHECK(double_coset_support(gl2, {1, 0}) == std::vector<Coweight>{{1, 0}});

  auto sl2 = RootDatum::preset("SL2");
  auto s = double_coset_support(sl2, {1, -1});
  CHECK(s == std::vector<Coweight>{{0, 0}, {1, -1}});

  auto sl3 = RootDatum::preset("SL3");
  auto s3 = double_coset_support(sl3, {2, -1, -1});
  std::set<Coweight> got(s3.begin(), s3.end());
  CHECK(got == std::set<Coweight>{{2, -1, -1}, {1, 0, -1}, {0, 0, 0}});
}

TEST_CASE("translation length law") {
  for (const char* name : {"GL2", "SL2", "SL3", "GL3", "Sp4", "PGL2"}) {
    auto d = RootDatum::preset(name);
    int n = d->weight_lattice_rank();
    std::vector<long> v(n, 0);
    while (true) {
      if (d->in_coweight_lattice(v) && d->is_dominant(v)) {
        auto t = AffineWeylElement::translation(d, v);
        CHECK(aw_length(t) == dot(d->two_rho(), v));
      }
      int i = 0;
      for (; i < n; ++i) {
        if (v[i] < 3) {
          ++v[i];
          break;
        }
        v[i] = 0;
      }
      if (i == n) break;
    }
  }
}

TEST_CASE("translations compare by dominance (Rapoport step)") {
  for (const char* name : {"GL2", "SL2", "SL3"}) {
    auto d = RootDatum::preset(name);
    int n = d->weight_lattice_rank();
    std::vector<Coweight> doms;
    std::vector<long> v(n, -2);
    while (true) {
      if (d->in_coweight_lattice(v) && d->is_dominant(v)) doms.push_back(v);
      int i = 0;
      for (; i < n; ++i) {
        if (v[i] < 2) {
          ++v[i];
          break;
        }
        v[i] = -2;
      }
      if (i == n) break;
    }
    for (const auto& mu : doms)
      for (const auto& lambda : doms) {
        bool bruhat = bruhat_leq(AffineWeylElement::translation(d, mu),
                                 AffineWeylElement::translation(d, lambda));
        CHECK(bruhat == dominance_leq(*d, mu, lambda));
      }
  }
}

TEST_CASE("closure identity: admissible translations per coset = dominance ideal") {
  for (const char* name : {"GL2", "SL2", "SL3"}) {
    auto d = RootDatum::preset(name);
    std::vector<Coweight> lambdas;
    if (std::string(name) == "GL2") lambdas = {{1, 0}, {1, 1}, {2, 0}, {2, -1}};
    if (std::string(name) == "SL2") lambdas = {{1, -1}, {2, -2}};
    if (std::string(name) == "SL3") lambdas = {{1, 0, -1}, {2, -1, -1}};
    for (const auto& lambda : lambdas) {
      std::set<Coweight> from_adm;
      for (const auto& w : admissible_set(d, lambda))
        from_adm.insert(dominant_conjugate(*d, w.translation_part()).first);
      auto support = double_coset_support(d, lambda);
      CHECK(from_adm == std::set<Coweight>(support.begin(), support.end()));
    }
  }
}

TEST_CASE("omega classes are W_aff-coset invariants") {
  auto gl2 = RootDatum::preset("GL2");
  auto tau = gl2_s_t10(gl2);
  CHECK(aw_length(tau) == 0);
  for (const auto& s : affine_generators(gl2))
    CHECK((tau * s).omega_class() == tau.omega_class());
  CHECK(tau.omega_class() == AffineWeylElement::translation(gl2, {1, 0}).omega_class());
  CHECK(tau.omega_class() != AffineWeylElement::identity(gl2).omega_class());
}

TEST_CASE("element text form round-trips") {
  auto gl2 = RootDatum::preset("GL2");
  for (const char* txt : {"e", "t^[1,0]", "t^[1,0]*s1", "s1", "t^[-1,2]*s1"}) {
    auto x = AffineWeylElement::parse(gl2, txt);
    CHECK(x.str() == txt);
    CHECK(AffineWeylElement::parse(gl2, x.str()) == x);
  }
  // s * t^[1,0] multiplies out to t^[0,1]*s1
  auto y = AffineWeylElement::parse(gl2, "s1*t^[1,0]");
  CHECK(y == gl2_s_t10(gl2));
  CHECK(y.str() == "t^[0,1]*s1");
}
