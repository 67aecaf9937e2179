#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "klpath/rational.hpp"

namespace klpath {

// Root coordinates in the basis of simple roots.
using Root = std::vector<Int>;

enum class Side { Left, Right };

class CoxSystem;

// A group element, represented by its exact integer matrix acting on
// simple-root coordinates. The inverse matrix is kept alongside so left
// and right descents are equally cheap. A canonical reduced word is
// cached at construction; equality and ordering use the matrix alone.
class CoxElem {
public:
  const std::vector<Int>& matrix() const { return mat_; }
  const std::vector<Int>& inverse_matrix() const { return inv_; }
  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  friend bool operator==(const CoxElem& a, const CoxElem& b) { return a.mat_ == b.mat_; }
  friend bool operator<(const CoxElem& a, const CoxElem& b) { return a.mat_ < b.mat_; }

private:
  friend class CoxSystem;
  std::vector<Int> mat_, inv_;  // rank x rank, row-major
  std::vector<int> word_;       // canonical reduced word, 0-based generators
};

// A crystallographic Coxeter system: off-diagonal orders in {2,3,4,6,inf},
// realized through a generalized Cartan matrix so every root has integer
// coordinates.
class CoxSystem {
public:
  static constexpr int kInfinity = -1;

  // rows[i][j] = m(s_i, s_j), kInfinity for unbounded order
  static CoxSystem from_rows(const std::vector<std::vector<int>>& rows);
  // "A<n>", "B<n>", "K<n>" (K = all orders 3)
  static CoxSystem preset(const std::string& name);
  // plain text: rank on line 1, then the matrix, token "inf" for infinity;
  // preset names are also accepted in place of a file
  static CoxSystem from_file(const std::string& path);
  static CoxSystem from_spec(const std::string& preset_or_path);

  int rank() const { return rank_; }
  int cox_entry(int i, int j) const { return cox_[i * rank_ + j]; }
  Int cartan(int i, int j) const { return cartan_[i * rank_ + j]; }

  CoxElem identity() const;
  CoxElem generator(int i) const;
  CoxElem from_word(std::span<const int> word) const;
  CoxElem from_word(std::initializer_list<int> word) const {
    return from_word(std::span<const int>(word.begin(), word.size()));
  }

  CoxElem multiply(const CoxElem& a, const CoxElem& b) const;
  CoxElem inverse(const CoxElem& a) const;

  int length(const CoxElem& w) const { return w.length(); }
  std::set<int> descents(const CoxElem& w, Side side) const;
  bool has_descent(const CoxElem& w, int i, Side side) const;

  // lifting-property recursion on a left descent of v
  bool bruhat_leq(const CoxElem& u, const CoxElem& v) const;

  // the positive root of w when w is a reflection
  std::optional<Root> as_reflection(const CoxElem& w) const;
  // positive root of x^{-1} y when that product is a reflection
  std::optional<Root> edge_root(const CoxElem& x, const CoxElem& y) const;
  // rebuild the reflection with the invariant bilinear form; beta must be a root
  CoxElem reflection_from_root(const Root& beta) const;

  Root simple_root(int i) const;
  Root apply(const CoxElem& w, const Root& v) const;
  Rat pairing(const Root& a, const Root& b) const;  // invariant bilinear form

  const std::string& name() const { return name_; }

private:
  CoxSystem() = default;
  void build(const std::vector<std::vector<int>>& rows);
  CoxElem make(std::vector<Int> mat, std::vector<Int> inv) const;
  CoxElem generator_nocache(int i) const;

  int rank_ = 0;
  std::vector<int> cox_;     // coxeter matrix, kInfinity for inf
  std::vector<Int> cartan_;  // cartan(i,j): s_i(a_j) = a_j - cartan(i,j) a_i
  std::vector<Rat> sym_;     // symmetrizers: sym_[i]*cartan(i,j) == sym_[j]*cartan(j,i)
  std::string name_;
};

bool is_positive_root(const Root& v);
bool is_negative_root(const Root& v);

}  // namespace klpath
