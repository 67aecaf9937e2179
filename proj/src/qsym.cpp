#include "klpath/qsym.hpp"

#include <stdexcept>

namespace klpath {

bool QSymSlice::is_zero() const {
  for (const auto& [w, c] : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

QSymSlice convert(const QSymSlice& slice, QBasis target) {
  if (slice.basis == target) return slice;
  int n = slice.degree - 1;
  QSymSlice out;
  out.degree = slice.degree;
  out.basis = target;
  if (target == QBasis::M) {
    // L_F = sum_{E >= F} M_E, so c_E = sum_{F <= E} beta_F
    for (const BinaryWord& e : all_words(n)) {
      Rat acc(0);
      for (const auto& [f, b] : slice.coeffs)
        if (f.leq(e)) acc += b;
      if (!acc.is_zero()) out.coeffs[e] = acc;
    }
  } else {
    // Moebius inversion over the Boolean lattice: beta_F = sum_{E >= F} (-1)^{|E|-|F|} c_E
    for (const BinaryWord& f : all_words(n)) {
      Rat acc(0);
      for (const auto& [e, c] : slice.coeffs) {
        if (!f.leq(e)) continue;
        int diff = e.count(1) - f.count(1);
        acc += (diff % 2 == 0) ? c : -c;
      }
      if (!acc.is_zero()) out.coeffs[f] = acc;
    }
  }
  return out;
}

PeakCheck is_peak(const QSymSlice& slice) {
  int n = slice.degree - 1;
  const QSymSlice in_l = convert(slice, QBasis::L);
  const QSymSlice in_m = convert(slice, QBasis::M);
  auto dual = dual_relations_witness(in_l.coeffs, n);
  auto bb = bayer_billera_witness(in_m.coeffs, n);
  if (dual.has_value() != bb.has_value())
    throw std::logic_error("is_peak: L and M characterizations disagree");
  PeakCheck r;
  r.peak = !dual.has_value();
  if (dual) r.witness = (slice.basis == QBasis::M) ? bb : dual;
  return r;
}

std::vector<std::pair<BinaryWord, int>> g_set(const BinaryWord& t) {
  std::vector<std::pair<BinaryWord, int>> out;
  int m = t.length();       // words E have the same length as T
  int n = m + 1;            // s_{t+1} = n
  std::vector<int> s{0};    // s_0 = 0
  for (int i : t.support()) s.push_back(i);
  s.push_back(n);
  int windows = static_cast<int>(s.size()) - 1;

  for (const BinaryWord& e : all_words(m)) {
    std::vector<int> boundary = e.boundary();
    bool ok = true;
    int sign_exp = 0;
    for (int j = 0; j < windows && ok; ++j) {
      // elements of boundary(E) strictly inside (s_j, s_{j+1})
      std::vector<int> inside;
      for (int x : boundary)
        if (x > s[j] && x < s[j + 1]) inside.push_back(x);
      // all representatives must agree mod 2 in every window
      for (size_t k = 1; k < inside.size(); ++k)
        if ((inside[k] - inside[0]) % 2 != 0) {
          ok = false;
          break;
        }
      if (!ok) break;
      if (j < windows - 1) {  // the first t windows must be hit
        if (inside.empty()) {
          ok = false;
          break;
        }
        sign_exp += s[j + 1] - inside[0] - 1;
      }
    }
    if (ok) out.push_back({e, (sign_exp % 2 == 0) ? 1 : -1});
  }
  return out;
}

QSymSlice d_basis(const BinaryWord& t) {
  QSymSlice out;
  out.degree = t.length() + 1;
  out.basis = QBasis::L;
  if (!t.sparse()) return out;  // G(T) is empty off the sparse monoid
  for (const auto& [e, sign] : g_set(t)) out.coeffs[e] = Rat(sign);
  return out;
}

std::map<BinaryWord, Rat> expand_in_d(const QSymSlice& slice) {
  PeakCheck check = is_peak(slice);
  if (!check.peak) throw std::invalid_argument("expand_in_d: slice is not a peak function");
  const QSymSlice in_l = convert(slice, QBasis::L);
  int n = slice.degree - 1;

  std::map<BinaryWord, Rat> coeffs;
  for (const BinaryWord& t : sparse_words(n)) {
    Rat h = in_l.coeff(t);
    if (!h.is_zero()) coeffs[t] = h;
  }

  // the sparse coordinates determine the whole slice; verify exactly
  std::map<BinaryWord, Rat> rebuilt;
  for (const auto& [t, h] : coeffs)
    for (const auto& [e, sign] : g_set(t)) {
      Rat& slot = rebuilt[e];
      slot += h * Rat(sign);
    }
  for (const BinaryWord& e : all_words(n))
    if (!(coeff_or_zero(rebuilt, e) == in_l.coeff(e)))
      throw std::logic_error("expand_in_d: reconstruction mismatch");
  return coeffs;
}

GradedQSym f_tilde(BruhatContext& ctx, const RefOrder& order, const CoxElem& u,
                   const CoxElem& v) {
  GradedQSym out;
  if (u == v) {
    out.constant = Rat(1);
    return out;
  }
  if (!ctx.leq(u, v)) throw std::invalid_argument("f_tilde: u is not below v");
  BruhatGraph graph(ctx, u, v);
  for (const auto& [len, slot] : graph.census_by_length(order)) {
    QSymSlice slice;
    slice.degree = len;
    slice.basis = QBasis::L;
    for (const auto& [e, c] : slot) slice.coeffs[e] = Rat(c);
    out.slices.push_back(std::move(slice));
  }
  return out;
}

}  // namespace klpath
