#ifndef SPRINGER_ROOT_DATA_HPP
#define SPRINGER_ROOT_DATA_HPP

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "springer/errors.hpp"

namespace springer {

using IntVec = std::vector<long>;   // characters / raw lattice vectors
using IntMat = std::vector<IntVec>; // row-major
using RatVec = std::vector<mpq_class>;

long dot(const IntVec& a, const IntVec& b);
IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_neg(const IntVec& a);
IntVec vec_scale(long c, const IntVec& a);
IntVec mat_apply(const IntMat& m, const IntVec& v);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat mat_identity(int n);
IntMat mat_transpose(const IntMat& m);

// Coweight in X_*(T), stored in ambient coordinates of length
// weight_lattice_rank.  Lattice membership is a property of the datum.
using Coweight = IntVec;

// Smith normal form U*M*V = D with U, V unimodular and D diagonal with
// d_1 | d_2 | ... (nonnegative).  Sized for the small matrices of this
// library; no overflow guards beyond long arithmetic.
struct SmithDecomposition {
  IntMat u, v;      // square unimodular
  IntVec diag;      // min(rows, cols) entries
  int rows, cols;
};
SmithDecomposition smith_normal_form(const IntMat& m);

// Canonical coset label in X_*(T)/Z-span(simple coroots).
struct Pi1Class {
  IntVec torsion;        // residues mod the nontrivial invariant factors
  IntVec torsion_mod;    // the invariant factors themselves (each > 1)
  IntVec free_part;      // coordinates along the free quotient
  bool operator==(const Pi1Class& o) const {
    return torsion == o.torsion && free_part == o.free_part;
  }
  bool operator!=(const Pi1Class& o) const { return !(*this == o); }
  bool operator<(const Pi1Class& o) const {
    if (torsion != o.torsion) return torsion < o.torsion;
    return free_part < o.free_part;
  }
  std::string label() const;
};

struct RootDatum;
using RootDatumPtr = std::shared_ptr<const RootDatum>;

// Element of the finite Weyl group, held as an index into the datum's
// enumerated group table.  Carries its action matrix on X_* and one
// BFS-canonical reduced word.
class WeylElement {
public:
  WeylElement() = default;
  WeylElement(RootDatumPtr d, int idx) : datum_(std::move(d)), idx_(idx) {}
  const RootDatumPtr& datum() const { return datum_; }
  int index() const { return idx_; }
  int length() const;
  const std::vector<int>& word() const;
  const IntMat& matrix() const;  // action on coweights
  WeylElement inverse() const;
  WeylElement operator*(const WeylElement& o) const;
  Coweight apply(const Coweight& mu) const;
  IntVec apply_char(const IntVec& chi) const;
  bool operator==(const WeylElement& o) const {
    return datum_.get() == o.datum_.get() && idx_ == o.idx_;
  }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }
  bool is_identity() const { return idx_ == 0; }

private:
  RootDatumPtr datum_;
  int idx_ = 0;
};

struct RootDatum : std::enable_shared_from_this<RootDatum> {
  // -- construction --------------------------------------------------------
  // Presets: SL2, PGL2, GL2, SL3, GL3, Sp4.
  static RootDatumPtr preset(const std::string& name);
  // Custom data; coweight_basis columns span X_*(T) inside Z^n (identity when
  // empty).  Throws InvalidCartan when validation fails.
  static RootDatumPtr custom(int weight_lattice_rank, IntMat simple_roots,
                             IntMat simple_coroots, IntMat coweight_basis = {},
                             const std::string& name = "custom");
  static std::vector<std::string> preset_names();

  // -- basic queries --------------------------------------------------------
  const std::string& name() const { return name_; }
  int rank() const { return rank_; }  // rank of X_*(T)
  int weight_lattice_rank() const { return n_; }
  int num_simple_roots() const { return static_cast<int>(simple_roots_.size()); }
  const IntMat& simple_roots() const { return simple_roots_; }
  const IntMat& simple_coroots() const { return simple_coroots_; }
  const IntMat& coweight_basis() const { return coweight_basis_; }
  const std::vector<IntVec>& positive_roots() const { return positive_roots_; }
  std::vector<IntVec> all_roots() const;
  const IntVec& two_rho() const { return two_rho_; }
  const IntMat& cartan_matrix() const { return cartan_; }
  const std::vector<RatVec>& fundamental_coweights() const {
    return fundamental_coweights_;
  }

  // -- coweight lattice -----------------------------------------------------
  bool in_coweight_lattice(const Coweight& mu) const;
  void require_coweight(const Coweight& mu) const;
  // Characters that cut out T inside the ambient torus; torus coordinate
  // vectors must satisfy chi(u) = 1 for each of these.
  const std::vector<IntVec>& torus_relations() const { return torus_relations_; }

  // -- Weyl group -----------------------------------------------------------
  int weyl_order() const { return static_cast<int>(elements_.size()); }
  WeylElement identity() const;
  WeylElement simple_reflection(int i) const;  // i in [0, num_simple_roots)
  WeylElement element(int idx) const;
  std::vector<WeylElement> weyl_group() const;
  WeylElement longest_element() const;
  // Lookup by action matrix; throws BadInput when not in the group.
  WeylElement element_by_matrix(const IntMat& m) const;

  long pair(const IntVec& chi, const Coweight& mu) const { return dot(chi, mu); }
  bool is_dominant(const Coweight& mu) const;
  mpq_class rho_pairing(const Coweight& mu) const;  // <rho, mu> exactly

  // Irreducible components of the Dynkin diagram (indices of simple roots)
  // and the highest root of each component.
  const std::vector<std::vector<int>>& components() const { return components_; }
  const std::vector<IntVec>& highest_roots() const { return highest_roots_; }

  // internal tables for WeylElement
  struct GroupEntry {
    IntMat matrix;
    std::vector<int> word;
    int inverse;
  };
  const GroupEntry& entry(int idx) const { return elements_[idx]; }

private:
  RootDatum() = default;
  void build(const std::string& name, int n, IntMat roots, IntMat coroots,
             IntMat basis);
  void enumerate_group();
  void generate_roots();
  void compute_pi1();
  void compute_components();
  void validate_cartan() const;

  std::string name_;
  int n_ = 0;     // ambient dimension
  int rank_ = 0;  // rank of X_*
  IntMat simple_roots_, simple_coroots_;
  IntMat coweight_basis_;  // n x rank, columns form a basis of X_*
  IntMat cartan_;
  std::vector<IntVec> positive_roots_;
  IntVec two_rho_;
  std::vector<RatVec> fundamental_coweights_;
  std::vector<GroupEntry> elements_;
  std::map<IntMat, int> element_index_;
  std::vector<IntVec> torus_relations_;
  std::vector<std::vector<int>> components_;
  std::vector<IntVec> highest_roots_;

  // pi1 data: coroots in coweight-basis coordinates, Smith-reduced
  SmithDecomposition pi1_smith_;
  IntMat basis_snf_u_, basis_snf_v_;  // for coweight-lattice membership
  IntVec basis_snf_diag_;

  friend Pi1Class pi1_class(const RootDatum& d, const Coweight& mu);
  friend class WeylElement;
};

// --- module operations ------------------------------------------------------

std::vector<WeylElement> weyl_group(const RootDatumPtr& d);

// Returns (mu_plus, w) with w(mu) = mu_plus dominant; w is the minimal-length
// element doing so.  Idempotent on the first output.
std::pair<Coweight, WeylElement> dominant_conjugate(const RootDatum& d,
                                                    const Coweight& mu);

// mu <= lambda in dominance: lambda - mu is a nonnegative integer (or, with
// rational=true, nonnegative rational) combination of simple coroots and the
// two coweights share a pi1 class.
bool dominance_leq(const RootDatum& d, const Coweight& mu, const Coweight& lambda,
                   bool rational = false);
// Rational-vector variant used for Newton points of explicit bundles; checks
// only the nonnegative rational cone condition.
bool rational_cone_leq(const RootDatum& d, const RatVec& nu, const RatVec& lambda);

Pi1Class pi1_class(const RootDatum& d, const Coweight& mu);

// Stabilizer machinery for dominant coweights (used by the dimension
// formulas): W_lambda is generated by the simple reflections fixing lambda.
std::vector<WeylElement> stabilizer_subgroup(const RootDatum& d, const Coweight& lambda);
WeylElement longest_in_stabilizer(const RootDatum& d, const Coweight& lambda);
// Minimal-length representative of w * W_lambda.
WeylElement min_coset_rep(const WeylElement& w, const Coweight& lambda);
// dim G/P_lambda = l(w0) - l(longest element of W_lambda).
int dim_g_mod_p(const RootDatum& d, const Coweight& lambda);

}  // namespace springer

#endif
