#pragma once

#include <map>
#include <optional>

#include "klpath/binary_word.hpp"
#include "klpath/rational.hpp"

namespace klpath {

// First violated relation instance, if any. For the dual relations j is
// unused and left at 0.
struct BBWitness {
  BinaryWord e, f;
  int j = 0;
};

// Generalized Dehn-Sommerville relations on a coefficient function over
// words of length n: for E ending in 1 (or empty), F starting with 1 (or
// empty) and j >= 1 with |E| + j + |F| = n,
//   sum_{i=1}^{j} (-1)^{i-1} a_{E E_{i,j} F} = 2 [j odd] a_{E 0^j F}.
std::optional<BBWitness> bayer_billera_witness(const std::map<BinaryWord, Rat>& a,
                                               int n);

// Dual form: for every factorization EF of a length-n word,
//   b_{EF} + b_{(E^)F} = b_{E F~} + b_{(E^) F~}
// with E^ flipping the last bit of E and F~ the complement of F.
std::optional<BBWitness> dual_relations_witness(const std::map<BinaryWord, Rat>& b,
                                                int n);

Rat coeff_or_zero(const std::map<BinaryWord, Rat>& m, const BinaryWord& w);

}  // namespace klpath
