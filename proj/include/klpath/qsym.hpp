#pragma once

#include <map>
#include <optional>
#include <vector>

#include "klpath/bb_relations.hpp"
#include "klpath/binary_word.hpp"
#include "klpath/bruhat.hpp"
#include "klpath/rational.hpp"

namespace klpath {

enum class QBasis { M, L };

// One homogeneous degree of a quasisymmetric function, as a coefficient
// map over words of length degree - 1 in the monomial or fundamental
// basis. No power series are ever materialized.
struct QSymSlice {
  int degree = 1;  // >= 1
  QBasis basis = QBasis::L;
  std::map<BinaryWord, Rat> coeffs;  // missing words are zero

  Rat coeff(const BinaryWord& w) const { return coeff_or_zero(coeffs, w); }
  bool is_zero() const;
};

// exact zeta / Moebius transform between L and M coordinates
QSymSlice convert(const QSymSlice& slice, QBasis target);

// Peak membership. The slice is checked in its own basis and, as a
// cross-check, converted and re-checked in the other one; disagreement is
// a logic error. On failure the first violated instance is reported.
struct PeakCheck {
  bool peak = false;
  std::optional<BBWitness> witness;  // set when peak is false
};
PeakCheck is_peak(const QSymSlice& slice);

// The index set G(T) with signs: all E of the same length as T whose
// boundary meets every gap window of T exactly in one parity class.
std::vector<std::pair<BinaryWord, int>> g_set(const BinaryWord& t);

// D_T = sum over G(T) of sgn(E, T) L_E; zero when T is not sparse
QSymSlice d_basis(const BinaryWord& t);

// coefficients of a peak slice in the D basis, read off the sparse
// L-coordinates; the reconstruction is verified exactly
std::map<BinaryWord, Rat> expand_in_d(const QSymSlice& slice);

// F~(u, v): the constant 1 when u = v, otherwise one slice per path
// length with L-coefficients b(u, v)_E
struct GradedQSym {
  Rat constant{0};
  std::vector<QSymSlice> slices;  // ascending degree
};
GradedQSym f_tilde(BruhatContext& ctx, const RefOrder& order, const CoxElem& u,
                   const CoxElem& v);

}  // namespace klpath
