#include "springer/root_data.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace springer {

long dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw BadInput("pairing of vectors of unequal length");
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec vec_neg(const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

IntVec vec_scale(long c, const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

IntVec mat_apply(const IntMat& m, const IntVec& v) {
  IntVec r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMat r(n, IntVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      long x = a[i][j];
      if (x == 0) continue;
      for (size_t l = 0; l < m; ++l) r[i][l] += x * b[j][l];
    }
  return r;
}

IntMat mat_identity(int n) {
  IntMat r(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

IntMat mat_transpose(const IntMat& m) {
  if (m.empty()) return {};
  IntMat r(m[0].size(), IntVec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[0].size(); ++j) r[j][i] = m[i][j];
  return r;
}

// --- Smith normal form -------------------------------------------------------

namespace {
void row_swap(IntMat& m, int a, int b) { std::swap(m[a], m[b]); }
void row_add(IntMat& m, int dst, int src, long q) {
  for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += q * m[src][j];
}
void row_negate(IntMat& m, int a) {
  for (auto& x : m[a]) x = -x;
}
void col_swap(IntMat& m, int a, int b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}
void col_add(IntMat& m, int dst, int src, long q) {
  for (auto& row : m) row[dst] += q * row[src];
}
}  // namespace

SmithDecomposition smith_normal_form(const IntMat& input) {
  IntMat m = input;
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  SmithDecomposition s;
  s.rows = rows;
  s.cols = cols;
  s.u = mat_identity(rows);
  s.v = mat_identity(cols);
  int t = 0;
  int bound = std::min(rows, cols);
  while (t < bound) {
    // locate a nonzero entry of minimal absolute value in the trailing block
    int pi = -1, pj = -1;
    long best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pi < 0 || std::abs(m[i][j]) < best)) {
          best = std::abs(m[i][j]);
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    if (pi != t) {
      row_swap(m, t, pi);
      row_swap(s.u, t, pi);
    }
    if (pj != t) {
      col_swap(m, t, pj);
      col_swap(s.v, t, pj);
    }
    bool clean = true;
    for (int i = t + 1; i < rows; ++i) {
      if (m[i][t] == 0) continue;
      long q = m[i][t] / m[t][t];
      row_add(m, i, t, -q);
      row_add(s.u, i, t, -q);
      if (m[i][t] != 0) clean = false;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (m[t][j] == 0) continue;
      long q = m[t][j] / m[t][t];
      col_add(m, j, t, -q);
      col_add(s.v, j, t, -q);
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // smaller pivot now exists; redo this step
    // enforce divisibility of the trailing block by the pivot
    bool divides = true;
    for (int i = t + 1; i < rows && divides; ++i)
      for (int j = t + 1; j < cols && divides; ++j)
        if (m[i][j] % m[t][t] != 0) {
          row_add(m, t, i, 1);
          row_add(s.u, t, i, 1);
          divides = false;
        }
    if (!divides) continue;
    if (m[t][t] < 0) {
      row_negate(m, t);
      row_negate(s.u, t);
    }
    ++t;
  }
  s.diag.assign(bound, 0);
  for (int i = 0; i < bound; ++i) s.diag[i] = m[i][i];
  return s;
}

// --- Pi1Class ----------------------------------------------------------------

std::string Pi1Class::label() const {
  if (torsion.empty() && free_part.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < torsion.size(); ++i) {
    if (!first) os << ",";
    os << torsion[i] << "(mod " << torsion_mod[i] << ")";
    first = false;
  }
  for (long f : free_part) {
    if (!first) os << ",";
    os << f;
    first = false;
  }
  return os.str();
}

// --- WeylElement --------------------------------------------------------------

int WeylElement::length() const {
  return static_cast<int>(datum_->entry(idx_).word.size());
}
const std::vector<int>& WeylElement::word() const { return datum_->entry(idx_).word; }
const IntMat& WeylElement::matrix() const { return datum_->entry(idx_).matrix; }
WeylElement WeylElement::inverse() const {
  return WeylElement(datum_, datum_->entry(idx_).inverse);
}
WeylElement WeylElement::operator*(const WeylElement& o) const {
  if (datum_.get() != o.datum_.get())
    throw BadInput("Weyl elements of different data");
  return datum_->element_by_matrix(mat_mul(matrix(), o.matrix()));
}
Coweight WeylElement::apply(const Coweight& mu) const { return mat_apply(matrix(), mu); }
IntVec WeylElement::apply_char(const IntVec& chi) const {
  // (w.chi)(mu) = chi(w^{-1} mu), so the matrix is the transpose of w^{-1}.
  return mat_apply(mat_transpose(inverse().matrix()), chi);
}

// --- RootDatum construction ----------------------------------------------------

RootDatumPtr RootDatum::preset(const std::string& name) {
  auto make = [&](int n, IntMat roots, IntMat coroots, IntMat basis) {
    auto d = std::shared_ptr<RootDatum>(new RootDatum());
    d->build(name, n, std::move(roots), std::move(coroots), std::move(basis));
    return RootDatumPtr(d);
  };
  if (name == "SL2") return make(2, {{1, -1}}, {{1, -1}}, {{1}, {-1}});
  if (name == "PGL2") return make(1, {{1}}, {{2}}, {{1}});
  if (name == "GL2") return make(2, {{1, -1}}, {{1, -1}}, mat_identity(2));
  if (name == "SL3")
    return make(3, {{1, -1, 0}, {0, 1, -1}}, {{1, -1, 0}, {0, 1, -1}},
                {{1, 0}, {-1, 1}, {0, -1}});
  if (name == "GL3")
    return make(3, {{1, -1, 0}, {0, 1, -1}}, {{1, -1, 0}, {0, 1, -1}},
                mat_identity(3));
  if (name == "Sp4") return make(2, {{1, -1}, {0, 2}}, {{1, -1}, {0, 1}},
                                 mat_identity(2));
  throw BadInput("unknown preset: " + name);
}

std::vector<std::string> RootDatum::preset_names() {
  return {"SL2", "PGL2", "GL2", "SL3", "GL3", "Sp4"};
}

RootDatumPtr RootDatum::custom(int n, IntMat roots, IntMat coroots, IntMat basis,
                               const std::string& name) {
  auto d = std::shared_ptr<RootDatum>(new RootDatum());
  if (basis.empty()) basis = mat_identity(n);
  d->build(name, n, std::move(roots), std::move(coroots), std::move(basis));
  return RootDatumPtr(d);
}

void RootDatum::build(const std::string& name, int n, IntMat roots, IntMat coroots,
                      IntMat basis) {
  name_ = name;
  n_ = n;
  simple_roots_ = std::move(roots);
  simple_coroots_ = std::move(coroots);
  coweight_basis_ = std::move(basis);
  if (simple_roots_.size() != simple_coroots_.size())
    throw InvalidCartan("simple roots and coroots must come in pairs");
  for (const auto& v : simple_roots_)
    if (static_cast<int>(v.size()) != n_)
      throw InvalidCartan("simple root of wrong dimension");
  for (const auto& v : simple_coroots_)
    if (static_cast<int>(v.size()) != n_)
      throw InvalidCartan("simple coroot of wrong dimension");
  rank_ = static_cast<int>(coweight_basis_.empty() ? 0 : coweight_basis_[0].size());
  if (static_cast<int>(coweight_basis_.size()) != n_)
    throw InvalidCartan("coweight basis of wrong dimension");

  int r = num_simple_roots();
  cartan_.assign(r, IntVec(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) cartan_[i][j] = dot(simple_roots_[i], simple_coroots_[j]);
  validate_cartan();

  // basis must have full column rank; prepare the membership solver
  {
    auto s = smith_normal_form(coweight_basis_);
    for (int i = 0; i < rank_; ++i)
      if (s.diag[i] == 0) throw InvalidCartan("coweight basis is not linearly independent");
    basis_snf_u_ = s.u;
    basis_snf_v_ = s.v;
    basis_snf_diag_ = s.diag;
  }
  // coroots must lie in the coweight lattice
  for (const auto& cr : simple_coroots_)
    if (!in_coweight_lattice(cr))
      throw InvalidCartan("simple coroot outside the coweight lattice");

  generate_roots();
  enumerate_group();
  compute_pi1();
  compute_components();

  two_rho_.assign(n_, 0);
  for (const auto& a : positive_roots_) two_rho_ = vec_add(two_rho_, a);

  // fundamental coweights: varpi_i = sum_j (C^{-1})_{ji} coroot_j
  {
    std::vector<RatVec> cinv(r, RatVec(r, 0));
    // invert the Cartan matrix over Q by Gaussian elimination
    std::vector<RatVec> a(r, RatVec(2 * r, 0));
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) a[i][j] = cartan_[i][j];
      a[i][r + i] = 1;
    }
    for (int col = 0; col < r; ++col) {
      int piv = -1;
      for (int i = col; i < r; ++i)
        if (a[i][col] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) throw InvalidCartan("Cartan matrix is singular");
      std::swap(a[col], a[piv]);
      mpq_class inv = 1 / a[col][col];
      for (auto& x : a[col]) x *= inv;
      for (int i = 0; i < r; ++i) {
        if (i == col || a[i][col] == 0) continue;
        mpq_class f = a[i][col];
        for (int j = 0; j < 2 * r; ++j) a[i][j] -= f * a[col][j];
      }
    }
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) cinv[i][j] = a[i][r + j];
    fundamental_coweights_.assign(r, RatVec(n_, 0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < n_; ++k)
          fundamental_coweights_[i][k] += cinv[j][i] * simple_coroots_[j][k];
  }

  // characters cutting out T in the ambient torus: integer kernel of basis^T
  {
    auto s = smith_normal_form(mat_transpose(coweight_basis_));
    // kernel basis = columns rank..n-1 of V
    for (int j = rank_; j < n_; ++j) {
      IntVec rel(n_);
      for (int i = 0; i < n_; ++i) rel[i] = s.v[i][j];
      torus_relations_.push_back(rel);
    }
  }
}

void RootDatum::validate_cartan() const {
  int r = num_simple_roots();
  for (int i = 0; i < r; ++i) {
    if (cartan_[i][i] != 2) throw InvalidCartan("Cartan diagonal entry is not 2");
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      if (cartan_[i][j] > 0) throw InvalidCartan("positive off-diagonal Cartan entry");
      if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
        throw InvalidCartan("Cartan matrix zero pattern is not symmetric");
    }
  }
  // linear independence of the simple roots
  if (r > n_) throw InvalidCartan("more simple roots than ambient dimensions");
  auto s = smith_normal_form(simple_roots_);
  for (int i = 0; i < r; ++i)
    if (s.diag[i] == 0)
      throw InvalidCartan("simple roots are not linearly independent");
}

namespace {
// Solve sum c_j * rows[j] = target over Q.  Returns false when inconsistent.
bool span_coefficients(const IntMat& rows, int n, const IntVec& target, RatVec& c) {
  int r = static_cast<int>(rows.size());
  std::vector<RatVec> sys(n, RatVec(r + 1, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < r; ++j) sys[i][j] = rows[j][i];
    sys[i][r] = target[i];
  }
  int row = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < r && row < n; ++col) {
    int piv = -1;
    for (int i = row; i < n; ++i)
      if (sys[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(sys[row], sys[piv]);
    mpq_class inv = 1 / sys[row][col];
    for (auto& x : sys[row]) x *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == row || sys[i][col] == 0) continue;
      mpq_class f = sys[i][col];
      for (int j = 0; j <= r; ++j) sys[i][j] -= f * sys[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < n; ++i)
    if (sys[i][r] != 0) return false;
  c.assign(r, 0);
  for (int i = 0; i < row; ++i) c[pivot_col[i]] = sys[i][r];
  return true;
}
}  // namespace

void RootDatum::generate_roots() {
  std::set<IntVec> roots(simple_roots_.begin(), simple_roots_.end());
  std::deque<IntVec> queue(simple_roots_.begin(), simple_roots_.end());
  const size_t root_cap = 400;
  while (!queue.empty()) {
    IntVec a = queue.front();
    queue.pop_front();
    for (int i = 0; i < num_simple_roots(); ++i) {
      IntVec b = vec_sub(a, vec_scale(dot(a, simple_coroots_[i]), simple_roots_[i]));
      if (roots.insert(b).second) queue.push_back(b);
      if (roots.size() > root_cap)
        throw InvalidCartan("root system does not close up (not finite type)");
    }
  }
  for (const auto& a : roots) {
    RatVec c;
    if (!span_coefficients(simple_roots_, n_, a, c))
      throw InvalidCartan("generated root outside the simple-root span");
    bool nonneg = true, nonpos = true;
    for (auto& x : c) {
      if (x < 0) nonneg = false;
      if (x > 0) nonpos = false;
    }
    if (nonneg && !nonpos) positive_roots_.push_back(a);
    if (!nonneg && !nonpos)
      throw InvalidCartan("generated root with mixed signs; invalid datum");
  }
  std::sort(positive_roots_.begin(), positive_roots_.end());
}

void RootDatum::enumerate_group() {
  const size_t group_cap = 50000;
  int r = num_simple_roots();
  std::vector<IntMat> gens(r);
  for (int i = 0; i < r; ++i) {
    IntMat s = mat_identity(n_);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        s[a][b] -= simple_coroots_[i][a] * simple_roots_[i][b];
    gens[i] = std::move(s);
  }
  elements_.clear();
  element_index_.clear();
  elements_.push_back({mat_identity(n_), {}, 0});
  element_index_[elements_[0].matrix] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      IntMat next = mat_mul(elements_[cur].matrix, gens[i]);
      if (element_index_.count(next)) continue;
      GroupEntry e;
      e.matrix = std::move(next);
      e.word = elements_[cur].word;
      e.word.push_back(i);
      e.inverse = -1;
      element_index_[e.matrix] = static_cast<int>(elements_.size());
      elements_.push_back(std::move(e));
      queue.push_back(static_cast<int>(elements_.size()) - 1);
      if (elements_.size() > group_cap)
        throw InvalidCartan("Weyl group does not close up (not finite type)");
    }
  }
  IntMat id = mat_identity(n_);
  for (size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].inverse >= 0) continue;
    for (size_t j = i; j < elements_.size(); ++j) {
      if (mat_mul(elements_[i].matrix, elements_[j].matrix) == id) {
        elements_[i].inverse = static_cast<int>(j);
        elements_[j].inverse = static_cast<int>(i);
        break;
      }
    }
    if (elements_[i].inverse < 0) throw InvalidCartan("group closure failure");
  }
}

void RootDatum::compute_pi1() {
  // coroots in coweight-basis coordinates: solve basis * x = coroot for each
  int r = num_simple_roots();
  IntMat coords(rank_, IntVec(r, 0));
  for (int j = 0; j < r; ++j) {
    IntVec y = mat_apply(basis_snf_u_, simple_coroots_[j]);
    IntVec t(rank_, 0);
    for (int i = 0; i < rank_; ++i) {
      if (y[i] % basis_snf_diag_[i] != 0)
        throw InvalidCartan("coroot outside the coweight lattice");
      t[i] = y[i] / basis_snf_diag_[i];
    }
    for (int i = rank_; i < n_; ++i)
      if (y[i] != 0) throw InvalidCartan("coroot outside the coweight lattice");
    IntVec x = mat_apply(basis_snf_v_, t);
    for (int i = 0; i < rank_; ++i) coords[i][j] = x[i];
  }
  pi1_smith_ = smith_normal_form(coords);
  // sign-normalize the free rows of U so labels are canonical
  int r_eff = std::min(rank_, r);
  for (int i = r_eff; i < rank_; ++i) {
    int lead = -1;
    for (int j = 0; j < rank_; ++j)
      if (pi1_smith_.u[i][j] != 0) {
        lead = j;
        break;
      }
    if (lead >= 0 && pi1_smith_.u[i][lead] < 0) row_negate(pi1_smith_.u, i);
  }
}

void RootDatum::compute_components() {
  int r = num_simple_roots();
  std::vector<int> comp(r, -1);
  int nc = 0;
  for (int i = 0; i < r; ++i) {
    if (comp[i] >= 0) continue;
    std::deque<int> queue{i};
    comp[i] = nc;
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      for (int b = 0; b < r; ++b)
        if (comp[b] < 0 && cartan_[a][b] != 0) {
          comp[b] = nc;
          queue.push_back(b);
        }
    }
    ++nc;
  }
  components_.assign(nc, {});
  for (int i = 0; i < r; ++i) components_[comp[i]].push_back(i);
  // highest root of each component: maximal height among roots supported there
  highest_roots_.assign(nc, {});
  for (int c = 0; c < nc; ++c) {
    long best_height = -1;
    for (const auto& a : positive_roots_) {
      RatVec coeff;
      if (!span_coefficients(simple_roots_, n_, a, coeff)) continue;
      long height = 0;
      bool in_comp = true;
      for (int j = 0; j < r; ++j) {
        if (coeff[j] == 0) continue;
        if (comp[j] != c) {
          in_comp = false;
          break;
        }
        height += static_cast<long>(mpz_class(coeff[j].get_num() / coeff[j].get_den()).get_si());
      }
      if (in_comp && height > best_height) {
        best_height = height;
        highest_roots_[c] = a;
      }
    }
  }
}

std::vector<IntVec> RootDatum::all_roots() const {
  std::vector<IntVec> r = positive_roots_;
  for (const auto& a : positive_roots_) r.push_back(vec_neg(a));
  return r;
}

bool RootDatum::in_coweight_lattice(const Coweight& mu) const {
  if (static_cast<int>(mu.size()) != n_) return false;
  IntVec y = mat_apply(basis_snf_u_, mu);
  for (int i = 0; i < rank_; ++i)
    if (y[i] % basis_snf_diag_[i] != 0) return false;
  for (int i = rank_; i < n_; ++i)
    if (y[i] != 0) return false;
  return true;
}

void RootDatum::require_coweight(const Coweight& mu) const {
  if (!in_coweight_lattice(mu)) {
    std::ostringstream os;
    os << "vector [";
    for (size_t i = 0; i < mu.size(); ++i) os << (i ? "," : "") << mu[i];
    os << "] is not in the coweight lattice of " << name_;
    throw NotInLattice(os.str());
  }
}

WeylElement RootDatum::identity() const {
  return WeylElement(shared_from_this(), 0);
}

WeylElement RootDatum::simple_reflection(int i) const {
  if (i < 0 || i >= num_simple_roots()) throw BadInput("simple reflection index out of range");
  IntMat s = mat_identity(n_);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) s[a][b] -= simple_coroots_[i][a] * simple_roots_[i][b];
  return element_by_matrix(s);
}

WeylElement RootDatum::element(int idx) const {
  if (idx < 0 || idx >= weyl_order()) throw BadInput("Weyl element index out of range");
  return WeylElement(shared_from_this(), idx);
}

std::vector<WeylElement> RootDatum::weyl_group() const {
  std::vector<WeylElement> out;
  out.reserve(elements_.size());
  for (size_t i = 0; i < elements_.size(); ++i)
    out.push_back(WeylElement(shared_from_this(), static_cast<int>(i)));
  return out;
}

WeylElement RootDatum::longest_element() const {
  int best = 0;
  for (size_t i = 1; i < elements_.size(); ++i)
    if (elements_[i].word.size() > elements_[best].word.size())
      best = static_cast<int>(i);
  return WeylElement(shared_from_this(), best);
}

WeylElement RootDatum::element_by_matrix(const IntMat& m) const {
  auto it = element_index_.find(m);
  if (it == element_index_.end())
    throw BadInput("matrix is not an element of the Weyl group");
  return WeylElement(shared_from_this(), it->second);
}

bool RootDatum::is_dominant(const Coweight& mu) const {
  for (const auto& a : simple_roots_)
    if (dot(a, mu) < 0) return false;
  return true;
}

mpq_class RootDatum::rho_pairing(const Coweight& mu) const {
  mpq_class q(dot(two_rho_, mu), 2);
  q.canonicalize();
  return q;
}

// --- module operations ---------------------------------------------------------

std::vector<WeylElement> weyl_group(const RootDatumPtr& d) { return d->weyl_group(); }

std::pair<Coweight, WeylElement> dominant_conjugate(const RootDatum& d,
                                                    const Coweight& mu) {
  d.require_coweight(mu);
  Coweight cur = mu;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < d.num_simple_roots(); ++i) {
      if (dot(d.simple_roots()[i], cur) < 0) {
        cur = vec_sub(cur, vec_scale(dot(d.simple_roots()[i], cur), d.simple_coroots()[i]));
        moved = true;
      }
    }
  }
  // minimal-length w with w(mu) = cur
  int best = -1;
  for (int i = 0; i < d.weyl_order(); ++i) {
    if (mat_apply(d.entry(i).matrix, mu) == cur) {
      if (best < 0 || d.entry(i).word.size() < d.entry(best).word.size()) best = i;
    }
  }
  if (best < 0) throw BadInput("internal: no Weyl element realizes the dominant conjugate");
  return {cur, d.element(best)};
}

namespace {
// Solve coroots * c = target over Q; returns false when inconsistent.
bool coroot_coefficients(const RootDatum& d, const RatVec& target, RatVec& c) {
  int n = d.weight_lattice_rank(), r = d.num_simple_roots();
  std::vector<RatVec> sys(n, RatVec(r + 1, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < r; ++j) sys[i][j] = d.simple_coroots()[j][i];
    sys[i][r] = target[i];
  }
  int row = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < r && row < n; ++col) {
    int piv = -1;
    for (int i = row; i < n; ++i)
      if (sys[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(sys[row], sys[piv]);
    mpq_class inv = 1 / sys[row][col];
    for (auto& x : sys[row]) x *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == row || sys[i][col] == 0) continue;
      mpq_class f = sys[i][col];
      for (int j = 0; j <= r; ++j) sys[i][j] -= f * sys[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < n; ++i)
    if (sys[i][r] != 0) return false;
  c.assign(r, 0);
  for (int i = 0; i < row; ++i) c[pivot_col[i]] = sys[i][r];
  return true;
}

}  // namespace

bool dominance_leq(const RootDatum& d, const Coweight& mu, const Coweight& lambda,
                   bool rational) {
  d.require_coweight(mu);
  d.require_coweight(lambda);
  RatVec target(d.weight_lattice_rank());
  for (int i = 0; i < d.weight_lattice_rank(); ++i) target[i] = lambda[i] - mu[i];
  RatVec c;
  if (!coroot_coefficients(d, target, c)) return false;
  for (const auto& x : c) {
    if (x < 0) return false;
    if (!rational && x.get_den() != 1) return false;
  }
  return pi1_class(d, mu) == pi1_class(d, lambda);
}

bool rational_cone_leq(const RootDatum& d, const RatVec& nu, const RatVec& lambda) {
  RatVec target(d.weight_lattice_rank());
  for (int i = 0; i < d.weight_lattice_rank(); ++i) target[i] = lambda[i] - nu[i];
  RatVec c;
  if (!coroot_coefficients(d, target, c)) return false;
  for (const auto& x : c)
    if (x < 0) return false;
  return true;
}

Pi1Class pi1_class(const RootDatum& d, const Coweight& mu) {
  d.require_coweight(mu);
  // coordinates of mu in the coweight basis
  IntVec y = mat_apply(d.basis_snf_u_, mu);
  IntVec x(d.rank_, 0);
  for (int i = 0; i < d.rank_; ++i) x[i] = y[i] / d.basis_snf_diag_[i];
  IntVec coords = mat_apply(d.basis_snf_v_, x);
  IntVec z = mat_apply(d.pi1_smith_.u, coords);
  Pi1Class cls;
  int r_eff = std::min<int>(d.rank_, d.num_simple_roots());
  for (int i = 0; i < r_eff; ++i) {
    long m = d.pi1_smith_.diag[i];
    if (m > 1) {
      long res = z[i] % m;
      if (res < 0) res += m;
      cls.torsion.push_back(res);
      cls.torsion_mod.push_back(m);
    }
  }
  for (int i = r_eff; i < d.rank_; ++i) cls.free_part.push_back(z[i]);
  return cls;
}

std::vector<WeylElement> stabilizer_subgroup(const RootDatum& d, const Coweight& lambda) {
  std::vector<WeylElement> out;
  for (int i = 0; i < d.weyl_order(); ++i)
    if (mat_apply(d.entry(i).matrix, lambda) == lambda) out.push_back(d.element(i));
  return out;
}

WeylElement longest_in_stabilizer(const RootDatum& d, const Coweight& lambda) {
  WeylElement best = d.identity();
  for (const auto& w : stabilizer_subgroup(d, lambda))
    if (w.length() > best.length()) best = w;
  return best;
}

WeylElement min_coset_rep(const WeylElement& w, const Coweight& lambda) {
  const RootDatum& d = *w.datum();
  WeylElement best = w;
  for (const auto& u : stabilizer_subgroup(d, lambda)) {
    WeylElement cand = w * u;
    if (cand.length() < best.length()) best = cand;
  }
  return best;
}

int dim_g_mod_p(const RootDatum& d, const Coweight& lambda) {
  return d.longest_element().length() - longest_in_stabilizer(d, lambda).length();
}

}  // namespace springer
