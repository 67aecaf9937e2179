#include "klpath/coxeter.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klpath {

namespace {

std::vector<Int> mat_identity(int r) {
  std::vector<Int> m(size_t(r) * r, 0);
  for (int i = 0; i < r; ++i) m[i * r + i] = 1;
  return m;
}

std::vector<Int> mat_mul(const std::vector<Int>& a, const std::vector<Int>& b, int r) {
  std::vector<Int> c(size_t(r) * r, 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      Int v = a[i * r + k];
      if (v == 0) continue;
      for (int j = 0; j < r; ++j) c[i * r + j] += v * b[k * r + j];
    }
  return c;
}

bool column_negative(const std::vector<Int>& m, int r, int col) {
  bool nonzero = false;
  for (int i = 0; i < r; ++i) {
    Int v = m[i * r + col];
    if (v > 0) return false;
    if (v < 0) nonzero = true;
  }
  return nonzero;
}

}  // namespace

bool is_positive_root(const Root& v) {
  bool nonzero = false;
  for (Int x : v) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  return nonzero;
}

bool is_negative_root(const Root& v) {
  bool nonzero = false;
  for (Int x : v) {
    if (x > 0) return false;
    if (x < 0) nonzero = true;
  }
  return nonzero;
}

CoxSystem CoxSystem::from_rows(const std::vector<std::vector<int>>& rows) {
  CoxSystem sys;
  sys.build(rows);
  return sys;
}

void CoxSystem::build(const std::vector<std::vector<int>>& rows) {
  rank_ = static_cast<int>(rows.size());
  if (rank_ < 1) throw std::invalid_argument("CoxSystem: empty matrix");
  cox_.assign(size_t(rank_) * rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    if (static_cast<int>(rows[i].size()) != rank_)
      throw std::invalid_argument("CoxSystem: matrix is not square");
    for (int j = 0; j < rank_; ++j) {
      int m = rows[i][j];
      if (i == j) {
        if (m != 1) throw std::invalid_argument("CoxSystem: diagonal must be 1");
      } else {
        if (m != 2 && m != 3 && m != 4 && m != 6 && m != kInfinity)
          throw std::invalid_argument("CoxSystem: order must be 2, 3, 4, 6 or inf");
        if (rows[j][i] != m)
          throw std::invalid_argument("CoxSystem: matrix is not symmetric");
      }
      cox_[i * rank_ + j] = m;
    }
  }

  // generalized Cartan entries; for orders 4 and 6 the smaller index takes
  // the -1 so that cartan(i,j) * cartan(j,i) = 4 cos^2(pi/m)
  cartan_.assign(size_t(rank_) * rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      if (i == j) {
        cartan_[i * rank_ + j] = 2;
        continue;
      }
      switch (cox_[i * rank_ + j]) {
        case 2: cartan_[i * rank_ + j] = 0; break;
        case 3: cartan_[i * rank_ + j] = -1; break;
        case 4: cartan_[i * rank_ + j] = (i < j) ? -1 : -2; break;
        case 6: cartan_[i * rank_ + j] = (i < j) ? -1 : -3; break;
        case kInfinity: cartan_[i * rank_ + j] = -2; break;
        default: break;
      }
    }

  // symmetrizers, one BFS per connected component
  sym_.assign(rank_, Rat(0));
  for (int start = 0; start < rank_; ++start) {
    if (!sym_[start].is_zero()) continue;
    sym_[start] = Rat(1);
    std::vector<int> queue{start};
    while (!queue.empty()) {
      int i = queue.back();
      queue.pop_back();
      for (int j = 0; j < rank_; ++j) {
        if (i == j || cartan(i, j) == 0) continue;
        Rat want = sym_[i] * Rat(cartan(i, j), 1) / Rat(cartan(j, i), 1);
        if (sym_[j].is_zero()) {
          sym_[j] = want;
          queue.push_back(j);
        } else if (!(sym_[j] == want)) {
          throw std::invalid_argument("CoxSystem: Cartan matrix is not symmetrizable");
        }
      }
    }
  }
}

CoxSystem CoxSystem::preset(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("CoxSystem: bad preset " + name);
  char family = name[0];
  int n = 0;
  try {
    n = std::stoi(name.substr(1));
  } catch (...) {
    throw std::invalid_argument("CoxSystem: bad preset " + name);
  }
  if (n < 1 || n > 16) throw std::invalid_argument("CoxSystem: bad preset rank");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) rows[i][i] = 1;
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) rows[i][i + 1] = rows[i + 1][i] = 3;
      break;
    case 'B':
      if (n < 2) throw std::invalid_argument("CoxSystem: B needs rank >= 2");
      for (int i = 0; i + 1 < n; ++i) rows[i][i + 1] = rows[i + 1][i] = 3;
      rows[n - 2][n - 1] = rows[n - 1][n - 2] = 4;
      break;
    case 'K':
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) rows[i][j] = 3;
      break;
    default:
      throw std::invalid_argument("CoxSystem: unknown preset family " + name);
  }
  CoxSystem sys = from_rows(rows);
  sys.name_ = name;
  return sys;
}

CoxSystem CoxSystem::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("CoxSystem: cannot open " + path);
  int n = 0;
  if (!(in >> n) || n < 1) throw std::invalid_argument("CoxSystem: bad rank in " + path);
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::string tok;
      if (!(in >> tok)) throw std::invalid_argument("CoxSystem: truncated matrix in " + path);
      if (tok == "inf")
        rows[i][j] = kInfinity;
      else
        rows[i][j] = std::stoi(tok);
    }
  CoxSystem sys = from_rows(rows);
  sys.name_ = path;
  return sys;
}

CoxSystem CoxSystem::from_spec(const std::string& spec) {
  if (spec.size() >= 2 && (spec[0] == 'A' || spec[0] == 'B' || spec[0] == 'K') &&
      std::all_of(spec.begin() + 1, spec.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return preset(spec);
  return from_file(spec);
}

CoxElem CoxSystem::make(std::vector<Int> mat, std::vector<Int> inv) const {
  CoxElem w;
  w.mat_ = std::move(mat);
  w.inv_ = std::move(inv);
  // canonical reduced word: repeatedly strip the smallest left descent
  std::vector<Int> m = w.mat_, mi = w.inv_;
  while (true) {
    int desc = -1;
    for (int i = 0; i < rank_; ++i)
      if (column_negative(mi, rank_, i)) {
        desc = i;
        break;
      }
    if (desc < 0) break;
    const CoxElem s = generator_nocache(desc);
    m = mat_mul(s.mat_, m, rank_);
    mi = mat_mul(mi, s.mat_, rank_);
    w.word_.push_back(desc);
  }
  if (m != mat_identity(rank_))
    throw std::logic_error("CoxSystem: descent extraction did not terminate at e");
  return w;
}

CoxElem CoxSystem::identity() const {
  CoxElem w;
  w.mat_ = mat_identity(rank_);
  w.inv_ = w.mat_;
  return w;
}

CoxElem CoxSystem::generator_nocache(int i) const {
  CoxElem w;
  w.mat_ = mat_identity(rank_);
  for (int j = 0; j < rank_; ++j) w.mat_[i * rank_ + j] -= cartan(i, j);
  w.inv_ = w.mat_;
  w.word_ = {i};
  return w;
}

CoxElem CoxSystem::generator(int i) const {
  if (i < 0 || i >= rank_) throw std::out_of_range("CoxSystem: generator index");
  return generator_nocache(i);
}

CoxElem CoxSystem::from_word(std::span<const int> word) const {
  std::vector<Int> m = mat_identity(rank_), mi = m;
  for (int i : word) {
    if (i < 0 || i >= rank_) throw std::out_of_range("CoxSystem: generator index");
    const CoxElem s = generator_nocache(i);
    m = mat_mul(m, s.mat_, rank_);
    mi = mat_mul(s.mat_, mi, rank_);
  }
  return make(std::move(m), std::move(mi));
}

CoxElem CoxSystem::multiply(const CoxElem& a, const CoxElem& b) const {
  return make(mat_mul(a.mat_, b.mat_, rank_), mat_mul(b.inv_, a.inv_, rank_));
}

CoxElem CoxSystem::inverse(const CoxElem& a) const { return make(a.inv_, a.mat_); }

bool CoxSystem::has_descent(const CoxElem& w, int i, Side side) const {
  // i in Des_L(w) iff w^{-1}(a_i) < 0; i in Des_R(w) iff w(a_i) < 0
  const std::vector<Int>& m = (side == Side::Left) ? w.inv_ : w.mat_;
  return column_negative(m, rank_, i);
}

std::set<int> CoxSystem::descents(const CoxElem& w, Side side) const {
  std::set<int> d;
  for (int i = 0; i < rank_; ++i)
    if (has_descent(w, i, side)) d.insert(i);
  return d;
}

bool CoxSystem::bruhat_leq(const CoxElem& u, const CoxElem& v) const {
  if (u.length() > v.length()) return false;
  if (u.length() == v.length()) return u == v;
  if (u.is_identity()) return true;
  int s = v.word_.front();  // canonical word starts with a left descent
  const CoxElem sv = multiply(generator_nocache(s), v);
  if (has_descent(u, s, Side::Left)) return bruhat_leq(multiply(generator_nocache(s), u), sv);
  return bruhat_leq(u, sv);
}

namespace {

// the positive root of a reflection matrix, or nullopt if m is not one
std::optional<Root> reflection_root_of(const std::vector<Int>& m, int r) {
  bool ident = true;
  for (int i = 0; i < r && ident; ++i)
    for (int j = 0; j < r && ident; ++j)
      if (m[i * r + j] != (i == j ? 1 : 0)) ident = false;
  if (ident) return std::nullopt;
  if (mat_mul(m, m, r) != mat_identity(r)) return std::nullopt;
  Int trace = 0;
  for (int i = 0; i < r; ++i) trace += m[i * r + i];
  if (trace != r - 2) return std::nullopt;
  // any nonzero column of (m - I) spans the -1 eigenline
  Root beta;
  for (int j = 0; j < r && beta.empty(); ++j) {
    Root col(r);
    bool nonzero = false;
    for (int i = 0; i < r; ++i) {
      col[i] = m[i * r + j] - (i == j ? 1 : 0);
      if (col[i] != 0) nonzero = true;
    }
    if (nonzero) beta = std::move(col);
  }
  Int g = 0;
  for (Int x : beta) g = std::gcd(g, x < 0 ? -x : x);
  for (Int& x : beta) x /= g;
  if (is_negative_root(beta))
    for (Int& x : beta) x = -x;
  if (!is_positive_root(beta)) return std::nullopt;
  // the matrix must negate beta
  for (int i = 0; i < r; ++i) {
    Int acc = 0;
    for (int j = 0; j < r; ++j) acc += m[i * r + j] * beta[j];
    if (acc != -beta[i]) return std::nullopt;
  }
  return beta;
}

}  // namespace

std::optional<Root> CoxSystem::as_reflection(const CoxElem& w) const {
  return reflection_root_of(w.mat_, rank_);
}

std::optional<Root> CoxSystem::edge_root(const CoxElem& x, const CoxElem& y) const {
  return reflection_root_of(mat_mul(x.inv_, y.mat_, rank_), rank_);
}

Root CoxSystem::simple_root(int i) const {
  Root v(rank_, 0);
  v[i] = 1;
  return v;
}

Root CoxSystem::apply(const CoxElem& w, const Root& v) const {
  Root out(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[i] += w.mat_[i * rank_ + j] * v[j];
  return out;
}

Rat CoxSystem::pairing(const Root& a, const Root& b) const {
  Rat acc(0);
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (b[j] == 0) continue;
      acc += Rat(a[i]) * Rat(b[j]) * sym_[i] * Rat(cartan(i, j));
    }
  }
  return acc;
}

CoxElem CoxSystem::reflection_from_root(const Root& beta) const {
  Rat norm = pairing(beta, beta);
  if (norm.is_zero()) throw std::invalid_argument("reflection_from_root: isotropic vector");
  std::vector<Int> m(size_t(rank_) * rank_, 0);
  for (int j = 0; j < rank_; ++j) {
    Rat c = Rat(2) * pairing(simple_root(j), beta) / norm;
    for (int i = 0; i < rank_; ++i) {
      Rat entry = Rat(i == j ? 1 : 0) - c * Rat(beta[i]);
      if (!entry.is_integer())
        throw std::invalid_argument("reflection_from_root: not a root");
      m[i * rank_ + j] = entry.num();
    }
  }
  std::vector<Int> inv = m;  // reflections are involutions
  if (mat_mul(m, m, rank_) != mat_identity(rank_))
    throw std::invalid_argument("reflection_from_root: not a root");
  return make(std::move(m), std::move(inv));
}

}  // namespace klpath
