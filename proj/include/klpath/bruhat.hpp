#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "klpath/binary_word.hpp"
#include "klpath/coxeter.hpp"
#include "klpath/reflection_order.hpp"

namespace klpath {

// A directed path in the Bruhat graph. Labels are the reflections
// t_i with x_i = x_{i-1} t_i; lengths strictly increase along the path.
struct BruhatPath {
  std::vector<CoxElem> vertices;
  std::vector<CoxElem> labels;
  int length() const { return static_cast<int>(labels.size()); }
};

// Per-system caches: lower intervals (by coatom descent from the top) and
// Bruhat comparisons derived from them. Groups may be infinite; only
// elements below some requested v are ever materialized.
class BruhatContext {
public:
  explicit BruhatContext(const CoxSystem& sys) : sys_(&sys) {}

  const CoxSystem& system() const { return *sys_; }
  const std::vector<CoxElem>& lower_interval(const CoxElem& v);
  bool leq(const CoxElem& u, const CoxElem& v);
  // elements of [u, v]; throws if u is not below v
  std::vector<CoxElem> interval(const CoxElem& u, const CoxElem& v);

private:
  const CoxSystem* sys_;
  std::map<std::vector<Int>, std::vector<CoxElem>> closure_;
  std::map<std::vector<Int>, std::set<std::vector<Int>>> member_;
};

// The Bruhat graph restricted to an interval [u, v], with reflection
// labels resolved to positive roots.
class BruhatGraph {
public:
  BruhatGraph(BruhatContext& ctx, const CoxElem& u, const CoxElem& v);

  const CoxSystem& system() const { return *sys_; }
  const std::vector<CoxElem>& elements() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  int rank() const { return rank_; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const std::vector<Root>& label_roots() const { return roots_; }
  const std::vector<std::vector<std::pair<int, int>>>& up_edges() const { return up_; }

  // path counts from u to v grouped by descent string, per path length
  std::map<int, std::map<BinaryWord, Int>> census_by_length(const RefOrder& order) const;
  std::map<BinaryWord, Int> census(const RefOrder& order) const;

  std::vector<BruhatPath> paths(int k) const;

private:
  const CoxSystem* sys_;
  std::vector<CoxElem> elems_;  // sorted by (length, matrix)
  std::vector<std::vector<std::pair<int, int>>> up_;  // (target, root id)
  std::vector<Root> roots_;
  int rank_ = 0, bottom_ = 0, top_ = 0;
};

// E_<(path): bit r - i records t_i > t_{i+1}
BinaryWord descent_string(const RefOrder& order, const BruhatPath& path);

std::map<BinaryWord, Int> b_counts(BruhatContext& ctx, const RefOrder& order,
                                   const CoxElem& u, const CoxElem& v, int k);
// c(u,v)_E = sum of b(u,v)_F over F <= E
std::map<BinaryWord, Int> c_counts(const std::map<BinaryWord, Int>& b, int len);

// Flag f- and h-vectors of the interval, indexed by words of length
// rank - 1; chains exclude the endpoints.
using FlagVector = std::map<BinaryWord, Int>;
std::pair<FlagVector, FlagVector> flag_vectors(BruhatContext& ctx, const CoxElem& u,
                                               const CoxElem& v);

}  // namespace klpath
