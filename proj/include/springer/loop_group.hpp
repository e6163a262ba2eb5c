#ifndef SPRINGER_LOOP_GROUP_HPP
#define SPRINGER_LOOP_GROUP_HPP

#include <optional>
#include <vector>

#include "springer/affine_weyl.hpp"
#include "springer/invariants.hpp"
#include "springer/laurent.hpp"

namespace springer {

bool is_matrix_group(const RootDatum& d);  // GL2, GL3, SL2, SL3

// Square matrix over F = k((t)) attached to a GL_n or SL_n datum.
class LoopMatrix {
public:
  LoopMatrix(RootDatumPtr datum, std::vector<std::vector<LaurentSeries>> entries);
  static LoopMatrix identity(const RootDatumPtr& d, CoefficientField f);
  static LoopMatrix diagonal(const RootDatumPtr& d, std::vector<LaurentSeries> diag);
  // I + c E_{ij}
  static LoopMatrix elementary(const RootDatumPtr& d, int i, int j,
                               const LaurentSeries& c);

  const RootDatumPtr& datum() const { return datum_; }
  int size() const { return n_; }
  CoefficientField field() const;
  const LaurentSeries& at(int i, int j) const { return entries_[i][j]; }
  LaurentSeries& at(int i, int j) { return entries_[i][j]; }

  LoopMatrix operator*(const LoopMatrix& o) const;
  LoopMatrix inverse() const;  // adjugate over det; n <= 3
  LaurentSeries det() const;
  LoopMatrix transpose() const;
  LoopMatrix scaled(const LaurentSeries& c) const;

  bool entries_in_O() const;  // all valuations >= 0 (certified)
  // reduction mod t as field elements; requires entries in O
  std::vector<std::vector<FieldElem>> reduction() const;

private:
  LoopMatrix() = default;
  RootDatumPtr datum_;
  int n_ = 0;
  std::vector<std::vector<LaurentSeries>> entries_;
};

LoopMatrix to_loop_matrix(const SplitElement& gamma);

// Elementary divisor valuations of an invertible matrix over O-pivots,
// sorted dominantly (decreasing); the unique dominant mu with
// g in G(O) t^mu G(O).
Coweight smith_cartan(const LoopMatrix& g);

// Raw divisor valuations (unsorted order of elimination) of an arbitrary
// matrix of full rank over F; building block shared with the lattice-chain
// method.
std::vector<long> smith_divisors(const LoopMatrix& g);

// The unique w~ with g in I w~ I, by triangular-restricted valuation-pivot
// elimination (fast path).
AffineWeylElement iwahori_cell(const LoopMatrix& g);
// Same cell computed from lattice-chain relative-position invariants; the
// source of truth the fast path must match.
AffineWeylElement iwahori_cell_reference(const LoopMatrix& g);
// Fast path checked against the reference on every call.
AffineWeylElement iwahori_cell_checked(const LoopMatrix& g);

bool spherical_membership(const LoopMatrix& g, const LoopMatrix& gamma,
                          const Coweight& lambda, Variant variant);
bool iwahori_membership(const LoopMatrix& g, const LoopMatrix& gamma,
                        const Coweight& lambda, Variant variant);

// Cell label for census reports.
struct CellLabel {
  Level kind = Level::Spherical;
  Coweight spherical;                         // dominant, for Level::Spherical
  std::optional<AffineWeylElement> iwahori;   // for Level::Iwahori
  static CellLabel spherical_cell(Coweight mu);
  static CellLabel iwahori_cell_label(AffineWeylElement w);
  bool operator<(const CellLabel& o) const;
  bool operator==(const CellLabel& o) const;
  std::string str() const;
};

}  // namespace springer

#endif
