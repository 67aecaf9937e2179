#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "klpath/rational.hpp"

namespace klpath {

// A finite word over {0,1}. Positions are 1-based throughout, matching the
// usual conventions for descent sets and compositions. The empty word is a
// valid value.
class BinaryWord {
public:
  BinaryWord() = default;
  explicit BinaryWord(std::string_view bits);
  static BinaryWord zeros(int n);
  static BinaryWord ones(int n);

  int length() const { return static_cast<int>(bits_.size()); }
  bool empty() const { return bits_.empty(); }
  int bit(int i) const;  // i in [1, length()]

  // member of the submonoid generated by 0 and 01 (or the empty word)
  bool sparse() const;

  BinaryWord complement() const;  // flip every bit
  BinaryWord opposite() const;    // reverse
  BinaryWord flip_last() const;   // flip the final bit; identity on the empty word
  BinaryWord concat(const BinaryWord& o) const;
  BinaryWord prefix(int k) const;
  BinaryWord suffix(int k) const;  // last k bits

  std::vector<int> support() const;  // positions of 1s
  int count(int bitval) const;

  // {i in [n-1] : bit(i) != bit(i+1)} with n = length() always included;
  // empty for the empty word
  std::vector<int> boundary() const;

  // run lengths of constant blocks, read left to right
  std::vector<int> exponent_composition() const;

  // gap composition read right to left: for support {s_1 < ... < s_t}
  // inside a word of length n-1 this is (n - s_t, ..., s_2 - s_1, s_1),
  // the composition indexing the monomial quasisymmetric function
  std::vector<int> oc_composition() const;

  // bitwise containment of supports
  bool leq(const BinaryWord& o) const;

  const std::string& str() const { return bits_; }

  friend bool operator==(const BinaryWord& a, const BinaryWord& b) = default;
  friend std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) {
    if (a.length() != b.length()) return a.length() <=> b.length();
    return a.bits_ <=> b.bits_;
  }

private:
  std::string bits_;  // chars '0'/'1'
};

std::vector<BinaryWord> all_words(int n);
std::vector<BinaryWord> sparse_words(int n);

// f_0 = 0, f_1 = 1, f_n = f_{n-1} + f_{n-2}; counts |2^n_s| = f_{n+1}
Int fibonacci(int n);

}  // namespace klpath
