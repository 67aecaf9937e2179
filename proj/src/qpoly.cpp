#include "klpath/qpoly.hpp"

#include <algorithm>

namespace klpath {

QPoly QPoly::monomial(Int coef, int exp) {
  QPoly p;
  p.add_term(coef, exp);
  return p;
}

QPoly& QPoly::add_term(Int coef, int exp) {
  if (exp < 0) throw std::invalid_argument("QPoly: negative exponent");
  if (exp >= static_cast<int>(coef_.size())) coef_.resize(exp + 1, 0);
  coef_[exp] += coef;
  trim();
  return *this;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  QPoly r = a;
  if (b.coef_.size() > r.coef_.size()) r.coef_.resize(b.coef_.size(), 0);
  for (size_t i = 0; i < b.coef_.size(); ++i) r.coef_[i] += b.coef_[i];
  r.trim();
  return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  QPoly r;
  r.coef_.assign(a.coef_.size() + b.coef_.size() - 1, 0);
  for (size_t i = 0; i < a.coef_.size(); ++i)
    for (size_t j = 0; j < b.coef_.size(); ++j)
      r.coef_[i + j] += a.coef_[i] * b.coef_[j];
  r.trim();
  return r;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coef_) c = -c;
  return r;
}

QPoly QPoly::shifted(int k) const {
  if (is_zero()) return QPoly();
  if (k < 0) throw std::invalid_argument("QPoly: negative shift");
  QPoly r;
  r.coef_.assign(coef_.size() + k, 0);
  std::copy(coef_.begin(), coef_.end(), r.coef_.begin() + k);
  return r;
}

QPoly QPoly::reciprocal(int n) const {
  if (degree() > n) throw std::invalid_argument("QPoly: reciprocal degree too small");
  QPoly r;
  if (is_zero()) return r;
  r.coef_.assign(n + 1, 0);
  for (size_t i = 0; i < coef_.size(); ++i) r.coef_[n - i] = coef_[i];
  r.trim();
  return r;
}

void QPoly::trim() {
  while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

namespace {

std::string term_str(Int coef, const std::string& power, bool first) {
  std::string out;
  Int c = coef;
  if (first) {
    if (c < 0) {
      out += "-";
      c = -c;
    }
  } else {
    out += (c < 0) ? " - " : " + ";
    if (c < 0) c = -c;
  }
  if (power.empty())
    out += std::to_string(c);
  else
    out += std::to_string(c) + "*" + power;
  return out;
}

}  // namespace

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (size_t i = 0; i < coef_.size(); ++i) {
    if (coef_[i] == 0) continue;
    std::string power;
    if (i == 1)
      power = "q";
    else if (i > 1)
      power = "q^" + std::to_string(i);
    out += term_str(coef_[i], power, first);
    first = false;
  }
  return out;
}

void HalfLaurent::add_term(Int coef, int twice_exp) {
  auto it = c_.find(twice_exp);
  if (it == c_.end()) {
    if (coef != 0) c_[twice_exp] = coef;
    return;
  }
  it->second += coef;
  if (it->second == 0) c_.erase(it);
}

Int HalfLaurent::coef(int twice_exp) const {
  auto it = c_.find(twice_exp);
  return it == c_.end() ? 0 : it->second;
}

HalfLaurent operator+(const HalfLaurent& a, const HalfLaurent& b) {
  HalfLaurent r = a;
  for (const auto& [e, c] : b.c_) r.add_term(c, e);
  return r;
}

HalfLaurent operator-(const HalfLaurent& a, const HalfLaurent& b) {
  HalfLaurent r = a;
  for (const auto& [e, c] : b.c_) r.add_term(-c, e);
  return r;
}

HalfLaurent HalfLaurent::shifted(int twice_shift) const {
  HalfLaurent r;
  for (const auto& [e, c] : c_) r.c_[e + twice_shift] = c;
  return r;
}

HalfLaurent HalfLaurent::from_qpoly(const QPoly& p, int twice_shift) {
  HalfLaurent r;
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coef(i) != 0) r.c_[2 * i + twice_shift] = p.coef(i);
  return r;
}

std::string HalfLaurent::str() const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : c_) {
    std::string power;
    if (e == 2)
      power = "q";
    else if (e != 0 && e % 2 == 0)
      power = "q^" + std::to_string(e / 2);
    else if (e % 2 != 0)
      power = "q^(" + std::to_string(e) + "/2)";
    out += term_str(c, power, first);
    first = false;
  }
  return out;
}

}  // namespace klpath
