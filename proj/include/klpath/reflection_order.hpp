#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "klpath/coxeter.hpp"
#include "klpath/rational.hpp"

namespace klpath {

// A total reflection ordering on the positive roots, built from a linear
// weight function and an indexing of the simple roots. Roots of weight
// zero (the positive roots of a parabolic) come last, ordered by a nested
// ordering; the rest compare by the lexicographic order of the normalized
// coordinate vector beta / p(beta). Lower s-conjugates wrap an existing
// ordering. All comparisons are exact.
class RefOrder {
public:
  // p: weight per simple root, nonnegative; indexing: permutation of the
  // simple roots, compared first-to-last; inner: required when some simple
  // root has weight zero
  static RefOrder weight_order(const CoxSystem& sys, std::vector<Rat> p,
                               std::vector<int> indexing,
                               std::optional<RefOrder> inner = std::nullopt);
  // all weights 1, natural indexing
  static RefOrder height_order(const CoxSystem& sys);
  // s is the maximum reflection; t -> sts is order preserving on the
  // parabolic generated by the other simples
  static RefOrder good_order(const CoxSystem& sys, int s);
  // weight 2 on alpha_r and 1 elsewhere, indexing alpha_s, alpha_r, rest
  static RefOrder biparabolic_order(const CoxSystem& sys, int r, int s);

  // r «_s r' iff r = s, or neither is s and srs « sr's
  RefOrder lower_conjugate(int s) const;

  bool less(const Root& a, const Root& b) const;
  // compare two reflections through their positive roots (memoized)
  bool less(const CoxElem& t1, const CoxElem& t2) const;

  const CoxSystem& system() const;

private:
  struct Node;
  explicit RefOrder(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace klpath
