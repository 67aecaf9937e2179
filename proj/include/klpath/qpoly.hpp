#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "klpath/rational.hpp"

namespace klpath {

// Integer polynomial in q with nonnegative exponents.
class QPoly {
public:
  QPoly() = default;
  QPoly(Int constant) {  // NOLINT: implicit by design
    if (constant != 0) coef_.push_back(constant);
  }
  static QPoly monomial(Int coef, int exp);

  // -1 for the zero polynomial
  int degree() const { return static_cast<int>(coef_.size()) - 1; }
  Int coef(int exp) const {
    return (exp >= 0 && exp < static_cast<int>(coef_.size())) ? coef_[exp] : 0;
  }
  bool is_zero() const { return coef_.empty(); }

  QPoly& add_term(Int coef, int exp);

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
  QPoly& operator-=(const QPoly& o) { return *this = *this - o; }

  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  // q^k * this
  QPoly shifted(int k) const;
  // q^n * P(1/q); requires degree() <= n
  QPoly reciprocal(int n) const;

  // "1", "-1*q + 2*q^2", terms ascending by exponent
  std::string str() const;

private:
  void trim();
  std::vector<Int> coef_;  // coef_[i] multiplies q^i
};

// Integer Laurent polynomial in q^(1/2); exponents stored doubled.
class HalfLaurent {
public:
  HalfLaurent() = default;

  void add_term(Int coef, int twice_exp);
  Int coef(int twice_exp) const;
  bool is_zero() const { return c_.empty(); }
  const std::map<int, Int>& terms() const { return c_; }

  friend HalfLaurent operator+(const HalfLaurent& a, const HalfLaurent& b);
  friend HalfLaurent operator-(const HalfLaurent& a, const HalfLaurent& b);
  friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) = default;

  // this * q^(twice_shift / 2)
  HalfLaurent shifted(int twice_shift) const;
  static HalfLaurent from_qpoly(const QPoly& p, int twice_shift = 0);

  std::string str() const;

private:
  std::map<int, Int> c_;  // key: 2 * exponent
};

}  // namespace klpath
