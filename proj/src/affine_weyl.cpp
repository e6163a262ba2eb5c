#include "springer/affine_weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace springer {

AffineWeylElement::AffineWeylElement(RootDatumPtr d, Coweight translation,
                                     WeylElement finite)
    : datum_(std::move(d)), translation_(std::move(translation)), finite_(finite) {
  datum_->require_coweight(translation_);
}

AffineWeylElement AffineWeylElement::identity(const RootDatumPtr& d) {
  return AffineWeylElement(d, Coweight(d->weight_lattice_rank(), 0), d->identity());
}

AffineWeylElement AffineWeylElement::translation(const RootDatumPtr& d,
                                                 const Coweight& mu) {
  return AffineWeylElement(d, mu, d->identity());
}

AffineWeylElement AffineWeylElement::operator*(const AffineWeylElement& o) const {
  if (datum_.get() != o.datum_.get())
    throw BadInput("affine Weyl elements of different data");
  return AffineWeylElement(datum_, vec_add(translation_, finite_.apply(o.translation_)),
                           finite_ * o.finite_);
}

AffineWeylElement AffineWeylElement::inverse() const {
  WeylElement winv = finite_.inverse();
  return AffineWeylElement(datum_, vec_neg(winv.apply(translation_)), winv);
}

bool AffineWeylElement::operator==(const AffineWeylElement& o) const {
  return datum_.get() == o.datum_.get() && translation_ == o.translation_ &&
         finite_ == o.finite_;
}

bool AffineWeylElement::operator<(const AffineWeylElement& o) const {
  if (translation_ != o.translation_) return translation_ < o.translation_;
  return finite_.index() < o.finite_.index();
}

bool AffineWeylElement::is_identity() const {
  return finite_.is_identity() &&
         std::all_of(translation_.begin(), translation_.end(),
                     [](long c) { return c == 0; });
}

Pi1Class AffineWeylElement::omega_class() const {
  return pi1_class(*datum_, translation_);
}

std::string AffineWeylElement::str() const {
  bool trivial_t = std::all_of(translation_.begin(), translation_.end(),
                               [](long c) { return c == 0; });
  std::ostringstream os;
  if (!trivial_t) {
    os << "t^[";
    for (size_t i = 0; i < translation_.size(); ++i)
      os << (i ? "," : "") << translation_[i];
    os << "]";
  }
  if (!finite_.is_identity()) {
    for (size_t i = 0; i < finite_.word().size(); ++i) {
      if (!trivial_t || i > 0) os << "*";
      os << "s" << finite_.word()[i] + 1;
    }
  }
  std::string s = os.str();
  return s.empty() ? "e" : s;
}

AffineWeylElement AffineWeylElement::parse(const RootDatumPtr& d, const std::string& text) {
  Coweight mu(d->weight_lattice_rank(), 0);
  WeylElement w = d->identity();
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (text.substr(i) == "e") return AffineWeylElement(d, mu, w);
  bool first = true;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (!first) {
      if (text[i] != '*') throw BadInput("expected '*' in affine element literal");
      ++i;
      skip_ws();
    }
    first = false;
    if (text[i] == 't') {
      ++i;
      if (i >= text.size() || text[i] != '^') throw BadInput("expected ^ after t");
      ++i;
      if (i >= text.size() || text[i] != '[') throw BadInput("expected [ after t^");
      ++i;
      Coweight v;
      while (true) {
        size_t start = i;
        while (i < text.size() && text[i] != ',' && text[i] != ']') ++i;
        v.push_back(std::stol(text.substr(start, i - start)));
        if (i >= text.size()) throw BadInput("unterminated translation bracket");
        if (text[i] == ']') {
          ++i;
          break;
        }
        ++i;
      }
      if (static_cast<int>(v.size()) != d->weight_lattice_rank())
        throw BadInput("translation vector of wrong length");
      // multiply the running element by t^v on the right
      mu = vec_add(mu, w.apply(v));
    } else if (text[i] == 's') {
      ++i;
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      int k = std::stoi(text.substr(start, i - start));
      if (k < 1 || k > d->num_simple_roots())
        throw BadInput("finite reflection index out of range in element literal");
      WeylElement s = d->simple_reflection(k - 1);
      w = w * s;
    } else {
      throw BadInput("unexpected character in affine element literal");
    }
  }
  return AffineWeylElement(d, mu, w);
}

int num_affine_generators(const RootDatum& d) {
  return d.num_simple_roots() + static_cast<int>(d.components().size());
}

namespace {
// s0 of a component with highest root theta is t^{-theta^vee} s_theta; write
// theta = v(alpha_i) for simple alpha_i, then theta^vee = v(alpha_i^vee) and
// s_theta = v s_i v^{-1}.
AffineWeylElement build_affine_node(const RootDatumPtr& d, const IntVec& theta) {
  for (const auto& v : d->weyl_group()) {
    for (int i = 0; i < d->num_simple_roots(); ++i) {
      if (v.apply_char(d->simple_roots()[i]) != theta) continue;
      Coweight thetavee = v.apply(d->simple_coroots()[i]);
      WeylElement s_theta = v * d->simple_reflection(i) * v.inverse();
      return AffineWeylElement(d, vec_neg(thetavee), s_theta);
    }
  }
  throw BadInput("could not construct the affine node reflection");
}
}  // namespace

AffineWeylElement affine_generator(const RootDatumPtr& d, int idx) {
  int r = d->num_simple_roots();
  int nc = static_cast<int>(d->components().size());
  if (idx >= 1 && idx <= r)
    return AffineWeylElement(d, Coweight(d->weight_lattice_rank(), 0),
                             d->simple_reflection(idx - 1));
  int comp = -1;
  if (idx == 0)
    comp = 0;
  else if (idx > r && idx < r + nc)
    comp = idx - r;
  if (comp < 0) throw BadInput("affine generator index out of range");
  return build_affine_node(d, d->highest_roots()[comp]);
}

const std::vector<AffineWeylElement>& affine_generators(const RootDatumPtr& d) {
  static std::mutex mu;
  static std::map<const RootDatum*, std::vector<AffineWeylElement>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d.get());
  if (it != cache.end()) return it->second;
  std::vector<AffineWeylElement> gens;
  for (int g = 0; g < num_affine_generators(*d); ++g)
    gens.push_back(affine_generator(d, g));
  // the shared_ptr inside each element keeps the datum alive for the cache
  return cache.emplace(d.get(), std::move(gens)).first->second;
}

AffineWeylElement aw_product(const AffineWeylElement& x, const AffineWeylElement& y) {
  return x * y;
}

long aw_length(const AffineWeylElement& x) {
  const RootDatum& d = *x.datum();
  const WeylElement& w = x.finite_part();
  long len = 0;
  for (const auto& a : d.positive_roots()) {
    IntVec wa = w.inverse().apply_char(a);
    bool w_inv_a_positive = !std::binary_search(
        d.positive_roots().begin(), d.positive_roots().end(), vec_neg(wa));
    long pairing = dot(a, x.translation_part());
    len += w_inv_a_positive ? std::labs(pairing) : std::labs(pairing + 1);
  }
  return len;
}

ReducedWord aw_reduced_word(const AffineWeylElement& x) {
  ReducedWord out{x, {}};
  AffineWeylElement cur = x;
  long len = aw_length(cur);
  const auto& gens = affine_generators(x.datum());
  int m = static_cast<int>(gens.size());
  std::vector<int> reversed;
  while (len > 0) {
    bool found = false;
    for (int g = 0; g < m; ++g) {
      AffineWeylElement next = cur * gens[g];
      long nl = aw_length(next);
      if (nl < len) {
        reversed.push_back(g);
        cur = next;
        len = nl;
        found = true;
        break;
      }
    }
    if (!found)
      throw BadInput("internal: positive-length element with no right descent");
  }
  out.omega = cur;
  out.letters.assign(reversed.rbegin(), reversed.rend());
  return out;
}

namespace {
using PairKey = std::pair<std::pair<Coweight, int>, std::pair<Coweight, int>>;

PairKey make_key(const AffineWeylElement& x, const AffineWeylElement& y) {
  return {{x.translation_part(), x.finite_part().index()},
          {y.translation_part(), y.finite_part().index()}};
}

bool bruhat_leq_same_coset(const AffineWeylElement& x, const AffineWeylElement& y,
                           std::map<PairKey, bool>& memo) {
  if (x == y) return true;
  long lx = aw_length(x), ly = aw_length(y);
  if (lx >= ly) return false;
  auto key = make_key(x, y);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const auto& gens = affine_generators(x.datum());
  bool result = false;
  for (size_t g = 0; g < gens.size(); ++g) {
    const AffineWeylElement& s = gens[g];
    AffineWeylElement sy = s * y;
    if (aw_length(sy) < ly) {
      AffineWeylElement sx = s * x;
      if (aw_length(sx) < lx)
        result = bruhat_leq_same_coset(sx, sy, memo);
      else
        result = bruhat_leq_same_coset(x, sy, memo);
      break;
    }
  }
  memo[key] = result;
  return result;
}
}  // namespace

bool bruhat_leq(const AffineWeylElement& x, const AffineWeylElement& y) {
  if (x.datum().get() != y.datum().get())
    throw BadInput("Bruhat comparison across different data");
  if (x.omega_class() != y.omega_class()) return false;
  std::map<PairKey, bool> memo;
  return bruhat_leq_same_coset(x, y, memo);
}

std::vector<AffineWeylElement> adm_maximal(const RootDatumPtr& d, const Coweight& lambda) {
  d->require_coweight(lambda);
  if (!d->is_dominant(lambda)) throw NotDominant("adm_maximal needs a dominant coweight");
  std::set<Coweight> orbit;
  for (const auto& w : d->weyl_group()) orbit.insert(w.apply(lambda));
  std::vector<AffineWeylElement> out;
  for (const auto& mu : orbit) out.push_back(AffineWeylElement::translation(d, mu));
  return out;
}

std::vector<AffineWeylElement> admissible_set(const RootDatumPtr& d, const Coweight& lambda) {
  d->require_coweight(lambda);
  if (!d->is_dominant(lambda)) throw NotDominant("admissible_set needs a dominant coweight");
  std::set<AffineWeylElement> acc;
  for (const auto& mx : adm_maximal(d, lambda)) {
    ReducedWord rw = aw_reduced_word(mx);
    size_t k = rw.letters.size();
    const auto& gens = affine_generators(d);
    // subword closure of one reduced word, deduplicated level by level
    std::set<AffineWeylElement> level{rw.omega};
    for (size_t pos = 0; pos < k; ++pos) {
      const AffineWeylElement& s = gens[rw.letters[pos]];
      std::set<AffineWeylElement> next;
      for (const auto& e : level) {
        next.insert(e);      // skip this letter
        next.insert(e * s);  // take this letter
      }
      level = std::move(next);
    }
    acc.insert(level.begin(), level.end());
  }
  return std::vector<AffineWeylElement>(acc.begin(), acc.end());
}

std::vector<Coweight> double_coset_support(const RootDatumPtr& d, const Coweight& lambda) {
  d->require_coweight(lambda);
  if (!d->is_dominant(lambda))
    throw NotDominant("double_coset_support needs a dominant coweight");
  long budget = dot(d->two_rho(), lambda) / 2;
  int r = d->num_simple_roots();
  std::vector<Coweight> out;
  std::vector<long> c(r, 0);
  while (true) {
    long total = 0;
    for (long x : c) total += x;
    if (total <= budget) {
      Coweight mu = lambda;
      for (int i = 0; i < r; ++i)
        mu = vec_sub(mu, vec_scale(c[i], d->simple_coroots()[i]));
      if (d->is_dominant(mu)) out.push_back(mu);
    }
    int i = 0;
    for (; i < r; ++i) {
      if (c[i] < budget) {
        ++c[i];
        break;
      }
      c[i] = 0;
    }
    if (i == r) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace springer
