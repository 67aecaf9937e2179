#pragma once

#include <string>
#include <vector>

#include "klpath/binary_word.hpp"
#include "klpath/qpoly.hpp"

namespace klpath {

// A walk on Z with unit steps starting at 0; heights[i] is the position
// after i steps.
struct LatticePath {
  std::vector<int> heights;  // size n + 1, heights[0] == 0

  int length() const { return static_cast<int>(heights.size()) - 1; }
  int end() const { return heights.back(); }
  std::string steps() const;  // "+-+" encoding
};

// N(path): bit i records heights[i] < 0, for i in [1, n-1]
BinaryWord negativity_word(const LatticePath& path);
int d_plus(const LatticePath& path);   // up-steps; equals (end + n) / 2
int d_minus(const LatticePath& path);  // down-steps

// all paths of length len(E)+1 whose negativity word is E
std::vector<LatticePath> paths_with_word(const BinaryWord& e);

// Upsilon_E = (-1)^{m_0(E)} sum over those paths of (-q)^{d_+}
QPoly upsilon(const BinaryWord& e);

// The index set J(T) with signs; a subset of G(T). Defined for sparse T
// and for the empty word (J(eps) = {eps}).
std::vector<std::pair<BinaryWord, int>> j_set(const BinaryWord& t);

// Omega~_T = sum over J(T) of sgn(E, T) Upsilon_E
QPoly omega_tilde(const BinaryWord& t);

// L(T): paths of length len(T)+1 whose negativity word lies in J(T)
std::vector<LatticePath> lattice_paths(const BinaryWord& t);
// L~(T): L(T) minus paths touching 0 just after a support position, and
// minus (for even length) paths touching 0 in the final stretch
std::vector<LatticePath> lattice_paths_reduced(const BinaryWord& t);

// the T-slaloms: members of L~(T) ending strictly above 0. Both the
// reduced-set characterization and the direct geometric one are computed
// and must agree.
std::vector<LatticePath> slaloms(const BinaryWord& t);

// Omega_T = (-1)^{s_1+...+s_t+t} sum over slaloms of (-q)^{d_-}
QPoly omega(const BinaryWord& t);

// per-path statistics entering the signed sums
int epsilon_stat(const BinaryWord& t, const LatticePath& path);
int eta_stat(const LatticePath& path);  // interior points at height >= 0

}  // namespace klpath
