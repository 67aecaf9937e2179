#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "klpath/binary_word.hpp"
#include "klpath/bruhat.hpp"

namespace klpath {

// Integer polynomial in the noncommuting variables a, b; terms are words
// over {a, b} (the empty word is the unit).
class NCPoly {
public:
  NCPoly() = default;
  NCPoly(Int constant) {  // NOLINT: implicit by design
    if (constant != 0) t_[""] = constant;
  }
  static NCPoly word(const std::string& w, Int coef = 1);
  // mu_E: a for each 0, b for each 1
  static NCPoly mu(const BinaryWord& e, Int coef = 1);

  const std::map<std::string, Int>& terms() const { return t_; }
  Int coef(const std::string& w) const;
  bool is_zero() const { return t_.empty(); }
  void add(const std::string& w, Int c);

  friend NCPoly operator+(const NCPoly& x, const NCPoly& y);
  friend NCPoly operator-(const NCPoly& x, const NCPoly& y);
  friend NCPoly operator*(const NCPoly& x, const NCPoly& y);
  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o) { return *this = *this + o; }
  NCPoly& operator-=(const NCPoly& o) { return *this = *this - o; }
  friend bool operator==(const NCPoly& x, const NCPoly& y) = default;

  NCPoly homogeneous(int degree) const;
  int max_degree() const;  // -1 when zero

  std::string str() const;

private:
  std::map<std::string, Int> t_;
};

// Integer polynomial in c, d with deg c = 1, deg d = 2.
class CdPoly {
public:
  CdPoly() = default;
  CdPoly(Int constant) {  // NOLINT: implicit by design
    if (constant != 0) t_[""] = constant;
  }
  static CdPoly word(const std::string& w, Int coef = 1);

  const std::map<std::string, Int>& terms() const { return t_; }
  Int coef(const std::string& w) const;
  bool is_zero() const { return t_.empty(); }
  void add(const std::string& w, Int c);

  friend CdPoly operator+(const CdPoly& x, const CdPoly& y);
  friend CdPoly operator-(const CdPoly& x, const CdPoly& y);
  friend CdPoly operator*(const CdPoly& x, const CdPoly& y);
  CdPoly operator-() const;
  CdPoly& operator+=(const CdPoly& o) { return *this = *this + o; }
  CdPoly& operator-=(const CdPoly& o) { return *this = *this - o; }
  friend bool operator==(const CdPoly& x, const CdPoly& y) = default;

  CdPoly homogeneous(int degree) const;
  int max_degree() const;

  static int word_degree(const std::string& w);
  // "c^2 + (2)d"
  std::string str() const;

private:
  std::map<std::string, Int> t_;
};

// c -> a+b, d -> ab+ba
NCPoly expand_cd(const CdPoly& p);

// deg-n cd-monomials correspond to sparse words of length n (0 -> c, 01 -> d)
std::string cd_monomial_for(const BinaryWord& sparse);
std::vector<std::string> cd_monomials(int degree);

// Formal tensors over pairs of ab-words, used by the coproduct.
using NCTensor = std::map<std::pair<std::string, std::string>, Int>;

// delta(v_1...v_n) = sum_i v_1...v_{i-1} (x) v_{i+1}...v_n, extended linearly
NCTensor coproduct(const NCPoly& p);

// D_y(x) = sum x_(1) y x_(2); a derivation for every y
NCPoly derive(const NCPoly& x, const NCPoly& y);

// the derivation with G'(a) = ab, G'(b) = ba (so G'(c) = d, G'(d) = dc)
NCPoly gprime(const NCPoly& p);
CdPoly gprime(const CdPoly& p);

struct NotCdExpressible : std::runtime_error {
  NotCdExpressible(BinaryWord e_, BinaryWord f_)
      : std::runtime_error("polynomial is not expressible in c, d (relation fails at E=" +
                           (e_.empty() ? std::string("eps") : e_.str()) + ", F=" +
                           (f_.empty() ? std::string("eps") : f_.str()) + ")"),
        e(std::move(e_)),
        f(std::move(f_)) {}
  BinaryWord e, f;
};

// Exact rewriting in c, d. The coefficient function of each homogeneous
// component must satisfy the dual relations (checked first; failure throws
// NotCdExpressible with the first violated pair); the expansion is then
// recovered by an exact rational solve and verified on all coordinates.
CdPoly to_cd(const NCPoly& p);

// sum of the path monomials mu over all Bruhat-graph paths from u to v
NCPoly complete_ab_index(BruhatContext& ctx, const RefOrder& order, const CoxElem& u,
                         const CoxElem& v);
CdPoly complete_cd_index(BruhatContext& ctx, const RefOrder& order, const CoxElem& u,
                         const CoxElem& v);

}  // namespace klpath
