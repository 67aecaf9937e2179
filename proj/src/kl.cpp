#include "klpath/kl.hpp"

#include <stdexcept>

#include "klpath/lattice.hpp"

namespace klpath {

QPoly KlOracle::r_poly(const CoxElem& u, const CoxElem& v) {
  if (u == v) return QPoly(1);
  if (!ctx_.leq(u, v)) return QPoly();
  Key key{u.matrix(), v.matrix()};
  if (auto it = r_memo_.find(key); it != r_memo_.end()) return it->second;

  int s = v.word().back();  // a right descent of v
  const CoxElem g = sys_->generator(s);
  const CoxElem vs = sys_->multiply(v, g);
  const CoxElem us = sys_->multiply(u, g);
  QPoly result;
  if (us.length() < u.length()) {
    result = r_poly(us, vs);
  } else {
    static const QPoly qm1 = QPoly::monomial(1, 1) - QPoly(1);
    result = qm1 * r_poly(u, vs) + QPoly::monomial(1, 1) * r_poly(us, vs);
  }
  r_memo_[key] = result;
  return result;
}

QPoly KlOracle::r_poly_left(const CoxElem& u, const CoxElem& v) {
  if (u == v) return QPoly(1);
  if (!ctx_.leq(u, v)) return QPoly();
  Key key{u.matrix(), v.matrix()};
  if (auto it = rl_memo_.find(key); it != rl_memo_.end()) return it->second;

  int s = v.word().front();  // a left descent of v
  const CoxElem g = sys_->generator(s);
  const CoxElem sv = sys_->multiply(g, v);
  const CoxElem su = sys_->multiply(g, u);
  QPoly result;
  if (su.length() < u.length()) {
    result = r_poly_left(su, sv);
  } else {
    static const QPoly qm1 = QPoly::monomial(1, 1) - QPoly(1);
    result = qm1 * r_poly_left(u, sv) + QPoly::monomial(1, 1) * r_poly_left(su, sv);
  }
  rl_memo_[key] = result;
  return result;
}

QPoly KlOracle::kl(const CoxElem& u, const CoxElem& v) {
  if (u == v) return QPoly(1);
  if (!ctx_.leq(u, v)) throw std::invalid_argument("kl: u is not below v");
  Key key{u.matrix(), v.matrix()};
  if (auto it = p_memo_.find(key); it != p_memo_.end()) return it->second;

  // q^l P(1/q) - P = sum_{u < z <= v} R_{u,z} P_{z,v}; the low-degree half
  // determines P under the degree bound
  QPoly rhs;
  for (const CoxElem& z : ctx_.interval(u, v)) {
    if (z == u) continue;
    rhs += r_poly(u, z) * kl(z, v);
  }
  int bound = (v.length() - u.length() - 1) / 2;
  QPoly p;
  for (int i = 0; i <= bound; ++i)
    if (rhs.coef(i) != 0) p.add_term(-rhs.coef(i), i);
  p_memo_[key] = p;
  return p;
}

QPoly kl_slalom(BruhatContext& ctx, const RefOrder& order, const CoxElem& u,
                const CoxElem& v) {
  if (u == v) return QPoly(1);
  if (!ctx.leq(u, v)) throw std::invalid_argument("kl_slalom: u is not below v");
  int ell = v.length() - u.length();

  BruhatGraph graph(ctx, u, v);
  QPoly p;
  for (const auto& [t, count] : graph.census(order)) {
    // path lengths match l mod 2, so the exponent is integral on every
    // string that actually occurs
    if ((ell - t.length() - 1) % 2 != 0)
      throw std::logic_error("kl_slalom: descent string with impossible parity");
    if (!t.sparse()) continue;
    int shift = (ell - t.length() - 1) / 2;
    QPoly term = omega(t).shifted(shift);
    for (int i = 0; i <= term.degree(); ++i)
      if (term.coef(i) != 0) p.add_term(count * term.coef(i), i);
  }
  return p;
}

HalfLaurent kmap(const QSymSlice& slice) {
  const QSymSlice in_l = (slice.basis == QBasis::L) ? slice : convert(slice, QBasis::L);
  HalfLaurent out;
  for (const auto& [e, c] : in_l.coeffs) {
    if (c.is_zero()) continue;
    if (!c.is_integer()) throw std::invalid_argument("kmap: non-integer coefficient");
    QPoly u = upsilon(e);
    for (int i = 0; i <= u.degree(); ++i)
      if (u.coef(i) != 0) out.add_term(c.num() * u.coef(i), 2 * i - (e.length() + 1));
  }
  return out;
}

HalfLaurent kmap(const GradedQSym& graded) {
  HalfLaurent out;
  if (!graded.constant.is_zero()) {
    if (!graded.constant.is_integer())
      throw std::invalid_argument("kmap: non-integer coefficient");
    out.add_term(graded.constant.num(), 0);
  }
  for (const QSymSlice& slice : graded.slices) out = out + kmap(slice);
  return out;
}

}  // namespace klpath
