#include "doctest.h"

#include <algorithm>
#include <set>

#include "springer/root_data.hpp"

using namespace springer;

namespace {

// Independent S3 oracle: all coordinate permutations of a 3-vector.
std::vector<Coweight> s3_orbit(const Coweight& v) {
  std::vector<int> idx = {0, 1, 2};
  std::vector<Coweight> out;
  do {
    out.push_back({v[idx[0]], v[idx[1]], v[idx[2]]});
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

std::vector<Coweight> dominant_coweights_in_box(const RootDatum& d, long lo, long hi) {
  std::vector<Coweight> out;
  int n = d.weight_lattice_rank();
  std::vector<long> v(n, lo);
  while (true) {
    if (d.in_coweight_lattice(v) && d.is_dominant(v)) out.push_back(v);
    int i = 0;
    for (; i < n; ++i) {
      if (v[i] < hi) {
        ++v[i];
        break;
      }
      v[i] = lo;
    }
    if (i == n) break;
  }
  return out;
}

}  // namespace

TEST_CASE("preset shapes") {
  auto gl2 = RootDatum::preset("GL2");
  CHECK(gl2->positive_roots() == std::vector<IntVec>{{1, -1}});
  auto all = gl2->all_roots();
  std::set<IntVec> phi(all.begin(), all.end());
  CHECK(phi == std::set<IntVec>{{1, -1}, {-1, 1}});
  CHECK(gl2->two_rho() == IntVec{1, -1});

  auto sl3 = RootDatum::preset("SL3");
  CHECK(sl3->all_roots().size() == 6);
  CHECK(sl3->weyl_order() == 6);

  auto sp4 = RootDatum::preset("Sp4");
  CHECK(sp4->all_roots().size() == 8);
  CHECK(sp4->weyl_order() == 8);

  auto sl2 = RootDatum::preset("SL2");
  CHECK(sl2->weyl_order() == 2);
  auto s = sl2->simple_reflection(0);
  CHECK((s * s).is_identity());

  auto pgl2 = RootDatum::preset("PGL2");
  CHECK(pgl2->weyl_order() == 2);
  CHECK(pgl2->weight_lattice_rank() == 1);
}

TEST_CASE("weyl group length distribution") {
  auto gl2 = RootDatum::preset("GL2");
  CHECK(weyl_group(gl2).size() == 2);

  auto sl3 = RootDatum::preset("SL3");
  std::vector<int> lengths;
  for (const auto& w : weyl_group(sl3)) lengths.push_back(w.length());
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<int>{0, 1, 1, 2, 2, 3});
}

TEST_CASE("length equals inversion count") {
  for (const auto& name : RootDatum::preset_names()) {
    auto d = RootDatum::preset(name);
    for (const auto& w : d->weyl_group()) {
      int inversions = 0;
      for (const auto& a : d->positive_roots()) {
        IntVec wa = w.apply_char(a);
        bool negative = std::any_of(
            d->positive_roots().begin(), d->positive_roots().end(),
            [&](const IntVec& b) { return wa == vec_neg(b); });
        if (negative) ++inversions;
      }
      CHECK(w.length() == inversions);
    }
  }
}

TEST_CASE("word is a reduced word for the matrix") {
  for (const auto& name : RootDatum::preset_names()) {
    auto d = RootDatum::preset(name);
    for (const auto& w : d->weyl_group()) {
      IntMat acc = mat_identity(d->weight_lattice_rank());
      for (int i : w.word()) acc = mat_mul(acc, d->simple_reflection(i).matrix());
      CHECK(acc == w.matrix());
    }
  }
}

TEST_CASE("dominant_conjugate on GL2") {
  auto gl2 = RootDatum::preset("GL2");
  auto [mu1, w1] = dominant_conjugate(*gl2, {0, 1});
  CHECK(mu1 == Coweight{1, 0});
  CHECK(w1.length() == 1);

  auto [mu2, w2] = dominant_conjugate(*gl2, {1, 0});
  CHECK(mu2 == Coweight{1, 0});
  CHECK(w2.is_identity());
}

TEST_CASE("dominant_conjugate on SL3 against the permutation oracle") {
  auto sl3 = RootDatum::preset("SL3");
  Coweight mu = {-1, -1, 2};
  // oracle: dominant representative among all 6 coordinate permutations
  Coweight expect;
  for (const auto& c : s3_orbit(mu))
    if (sl3->is_dominant(c)) expect = c;
  CHECK(expect == Coweight{2, -1, -1});

  auto [plus, w] = dominant_conjugate(*sl3, mu);
  CHECK(plus == expect);
  CHECK(w.length() == 2);
  CHECK(w.apply(mu) == plus);
}

TEST_CASE("dominant_conjugate is idempotent") {
  for (const auto& name : RootDatum::preset_names()) {
    auto d = RootDatum::preset(name);
    for (const auto& mu : dominant_coweights_in_box(*d, -3, 3)) {
      auto [plus, w] = dominant_conjugate(*d, mu);
      CHECK(plus == mu);
      CHECK(w.is_identity());
      auto [plus2, w2] = dominant_conjugate(*d, plus);
      CHECK(plus2 == plus);
    }
  }
}

TEST_CASE("dominance_leq examples") {
  auto gl2 = RootDatum::preset("GL2");
  CHECK(dominance_leq(*gl2, {0, 1}, {1, 0}));
  CHECK(dominance_leq(*gl2, {1, 0}, {1, 0}));
  CHECK_FALSE(dominance_leq(*gl2, {0, 0}, {1, 0}));
}

TEST_CASE("dominance is a partial order on each pi1 class") {
  for (const auto& name : {"GL2", "SL2", "GL3", "Sp4"}) {
    auto d = RootDatum::preset(name);
    auto doms = dominant_coweights_in_box(*d, -3, 3);
    size_t m = doms.size();
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) leq[i][j] = dominance_leq(*d, doms[i], doms[j]);
    for (size_t i = 0; i < m; ++i) {
      CHECK(leq[i][i]);
      for (size_t j = 0; j < m; ++j) {
        if (i != j && leq[i][j]) CHECK_FALSE(leq[j][i]);
        for (size_t k = 0; k < m; ++k)
          if (leq[i][j] && leq[j][k]) CHECK(leq[i][k]);
      }
    }
  }
}

TEST_CASE("pi1 classes") {
  auto gl2 = RootDatum::preset("GL2");
  CHECK(pi1_class(*gl2, {1, 0}).label() == "1");
  CHECK(pi1_class(*gl2, {1, 1}).label() == "2");
  CHECK(pi1_class(*gl2, {1, 0}) != pi1_class(*gl2, {0, 0}));
  CHECK(pi1_class(*gl2, {1, 0}) == pi1_class(*gl2, {0, 1}));

  auto sl2 = RootDatum::preset("SL2");
  CHECK(pi1_class(*sl2, {1, -1}).label() == "0");
  CHECK(pi1_class(*sl2, {1, -1}) == pi1_class(*sl2, {0, 0}));

  auto sl3 = RootDatum::preset("SL3");
  Coweight diff = vec_sub({1, 0, -1}, {1, -1, 0});
  CHECK(pi1_class(*sl3, diff) == pi1_class(*sl3, {0, 0, 0}));

  auto pgl2 = RootDatum::preset("PGL2");
  CHECK(pi1_class(*pgl2, {1}) != pi1_class(*pgl2, {0}));
  CHECK(pi1_class(*pgl2, {2}) == pi1_class(*pgl2, {0}));
}

TEST_CASE("two_rho pairs to 2 with simple coroots of semisimple presets") {
  for (const auto& name : {"SL2", "PGL2", "SL3", "Sp4"}) {
    auto d = RootDatum::preset(name);
    for (const auto& cr : d->simple_coroots()) CHECK(dot(d->two_rho(), cr) == 2);
  }
  // holds for the GL presets too
  for (const auto& name : {"GL2", "GL3"}) {
    auto d = RootDatum::preset(name);
    for (const auto& cr : d->simple_coroots()) CHECK(dot(d->two_rho(), cr) == 2);
  }
}

TEST_CASE("coweight lattice membership") {
  auto sl2 = RootDatum::preset("SL2");
  CHECK(sl2->in_coweight_lattice({2, -2}));
  CHECK_FALSE(sl2->in_coweight_lattice({1, 0}));
  CHECK_THROWS_AS(pi1_class(*sl2, {1, 0}), NotInLattice);

  auto sl3 = RootDatum::preset("SL3");
  CHECK(sl3->in_coweight_lattice({1, 0, -1}));
  CHECK_FALSE(sl3->in_coweight_lattice({1, 0, 0}));
}

TEST_CASE("custom data validation") {
  // valid: a rank-1 system realized in dimension 2 (SL2 again)
  auto d = RootDatum::custom(2, {{1, -1}}, {{1, -1}});
  CHECK(d->weyl_order() == 2);

  // Cartan diagonal violated
  CHECK_THROWS_AS(RootDatum::custom(2, {{1, 0}}, {{1, 0}}), InvalidCartan);
  // positive off-diagonal entries
  CHECK_THROWS_AS(
      RootDatum::custom(2, {{1, 0}, {1, 1}}, {{2, 0}, {1, 1}}),
      InvalidCartan);
  // dependent simple roots
  CHECK_THROWS_AS(
      RootDatum::custom(2, {{1, -1}, {-1, 1}}, {{1, -1}, {-1, 1}}),
      InvalidCartan);
  // infinite type (affine A1 Cartan)
  CHECK_THROWS_AS(
      RootDatum::custom(2, {{2, 0}, {-2, 0}}, {{1, 0}, {-1, 0}}),
      InvalidCartan);
}

TEST_CASE("fundamental coweights pair correctly with simple roots") {
  for (const auto& name : RootDatum::preset_names()) {
    auto d = RootDatum::preset(name);
    const auto& fw = d->fundamental_coweights();
    for (int i = 0; i < d->num_simple_roots(); ++i)
      for (int j = 0; j < d->num_simple_roots(); ++j) {
        mpq_class p = 0;
        for (int k = 0; k < d->weight_lattice_rank(); ++k)
          p += d->simple_roots()[i][k] * fw[j][k];
        CHECK(p == mpq_class(i == j ? 1 : 0));
      }
  }
}

TEST_CASE("highest roots") {
  auto sl3 = RootDatum::preset("SL3");
  REQUIRE(sl3->components().size() == 1);
  CHECK(sl3->highest_roots()[0] == IntVec{1, 0, -1});
  auto sp4 = RootDatum::preset("Sp4");
  CHECK(sp4->highest_roots()[0] == IntVec{2, 0});
}
