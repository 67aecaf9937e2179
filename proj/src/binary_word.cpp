#include "klpath/binary_word.hpp"

#include <algorithm>
#include <stdexcept>

namespace klpath {

BinaryWord::BinaryWord(std::string_view bits) : bits_(bits) {
  for (char c : bits_)
    if (c != '0' && c != '1')
      throw std::invalid_argument("BinaryWord: invalid character '" +
                                  std::string(1, c) + "'");
}

BinaryWord BinaryWord::zeros(int n) { return BinaryWord(std::string(n, '0')); }
BinaryWord BinaryWord::ones(int n) { return BinaryWord(std::string(n, '1')); }

int BinaryWord::bit(int i) const {
  if (i < 1 || i > length()) throw std::out_of_range("BinaryWord: position");
  return bits_[i - 1] - '0';
}

bool BinaryWord::sparse() const {
  // no leading 1, no adjacent 1s, no trailing... 0 and 01 blocks exactly:
  // equivalent to bits_[0] != '1' and no "11" substring
  if (bits_.empty()) return true;
  if (bits_.front() == '1') return false;
  for (size_t i = 0; i + 1 < bits_.size(); ++i)
    if (bits_[i] == '1' && bits_[i + 1] == '1') return false;
  return true;
}

BinaryWord BinaryWord::complement() const {
  BinaryWord r = *this;
  for (char& c : r.bits_) c = (c == '0') ? '1' : '0';
  return r;
}

BinaryWord BinaryWord::opposite() const {
  BinaryWord r = *this;
  std::reverse(r.bits_.begin(), r.bits_.end());
  return r;
}

BinaryWord BinaryWord::flip_last() const {
  BinaryWord r = *this;
  if (!r.bits_.empty()) r.bits_.back() = (r.bits_.back() == '0') ? '1' : '0';
  return r;
}

BinaryWord BinaryWord::concat(const BinaryWord& o) const {
  BinaryWord r = *this;
  r.bits_ += o.bits_;
  return r;
}

BinaryWord BinaryWord::prefix(int k) const {
  return BinaryWord(std::string_view(bits_).substr(0, k));
}

BinaryWord BinaryWord::suffix(int k) const {
  return BinaryWord(std::string_view(bits_).substr(bits_.size() - k));
}

std::vector<int> BinaryWord::support() const {
  std::vector<int> s;
  for (int i = 1; i <= length(); ++i)
    if (bits_[i - 1] == '1') s.push_back(i);
  return s;
}

int BinaryWord::count(int bitval) const {
  char c = bitval ? '1' : '0';
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), c));
}

std::vector<int> BinaryWord::boundary() const {
  std::vector<int> d;
  int n = length();
  if (n == 0) return d;
  for (int i = 1; i < n; ++i)
    if (bits_[i - 1] != bits_[i]) d.push_back(i);
  d.push_back(n);
  return d;
}

std::vector<int> BinaryWord::exponent_composition() const {
  std::vector<int> comp;
  int prev = 0;
  for (int x : boundary()) {
    comp.push_back(x - prev);
    prev = x;
  }
  return comp;
}

std::vector<int> BinaryWord::oc_composition() const {
  std::vector<int> s = support();
  std::vector<int> comp;
  int n = length() + 1;
  int prev = n;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    comp.push_back(prev - *it);
    prev = *it;
  }
  comp.push_back(prev);
  return comp;
}

bool BinaryWord::leq(const BinaryWord& o) const {
  if (length() != o.length())
    throw std::invalid_argument("BinaryWord: leq needs equal lengths");
  for (int i = 0; i < length(); ++i)
    if (bits_[i] == '1' && o.bits_[i] == '0') return false;
  return true;
}

std::vector<BinaryWord> all_words(int n) {
  std::vector<BinaryWord> out;
  out.reserve(1u << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s[i] = '1';
    out.emplace_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BinaryWord> sparse_words(int n) {
  std::vector<BinaryWord> out;
  for (const auto& w : all_words(n))
    if (w.sparse()) out.push_back(w);
  return out;
}

Int fibonacci(int n) {
  if (n < 0) throw std::invalid_argument("fibonacci: negative index");
  Int a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    Int t = a + b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace klpath
