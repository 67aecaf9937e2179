#pragma once

#include <map>

#include "klpath/bruhat.hpp"
#include "klpath/qpoly.hpp"
#include "klpath/qsym.hpp"

namespace klpath {

// Classical computation of the Kazhdan-Lusztig polynomials: R-polynomials
// by the descent recursion, then P extracted bottom-up under the degree
// bound deg P_{u,v} <= (l(u,v) - 1) / 2. Serves as the oracle the path
// formula is checked against; shares nothing with it beyond the group
// and interval machinery.
class KlOracle {
public:
  explicit KlOracle(const CoxSystem& sys) : sys_(&sys), ctx_(sys) {}

  QPoly r_poly(const CoxElem& u, const CoxElem& v);
  // independent variant recursing on left descents
  QPoly r_poly_left(const CoxElem& u, const CoxElem& v);
  QPoly kl(const CoxElem& u, const CoxElem& v);

  BruhatContext& context() { return ctx_; }

private:
  using Key = std::pair<std::vector<Int>, std::vector<Int>>;
  const CoxSystem* sys_;
  BruhatContext ctx_;
  std::map<Key, QPoly> r_memo_, rl_memo_, p_memo_;
};

// P_{u,v} as the sum over sparse descent strings T of
// b(u,v)_T q^{(l - l(T) - 1)/2} Omega_T; exact, no recursion.
QPoly kl_slalom(BruhatContext& ctx, const RefOrder& order, const CoxElem& u,
                const CoxElem& v);

// K(L_E) = q^{-(l(E)+1)/2} Upsilon_E, extended linearly over L-coordinates;
// integer coefficients are required of the input
HalfLaurent kmap(const QSymSlice& slice);
HalfLaurent kmap(const GradedQSym& graded);

}  // namespace klpath
