#include "klpath/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace klpath {

namespace {

std::vector<int> support_frame(const BinaryWord& t) {
  // s_0 = 0, the support of T, s_{t+1} = n
  std::vector<int> s{0};
  for (int i : t.support()) s.push_back(i);
  s.push_back(t.length() + 1);
  return s;
}

std::vector<LatticePath> all_paths(int n) {
  std::vector<LatticePath> out;
  out.reserve(1u << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    LatticePath p;
    p.heights.resize(n + 1, 0);
    for (int i = 1; i <= n; ++i)
      p.heights[i] = p.heights[i - 1] + ((mask >> (i - 1)) & 1 ? 1 : -1);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

std::string LatticePath::steps() const {
  std::string s;
  for (size_t i = 1; i < heights.size(); ++i)
    s.push_back(heights[i] > heights[i - 1] ? '+' : '-');
  return s;
}

BinaryWord negativity_word(const LatticePath& path) {
  int n = path.length();
  std::string bits;
  for (int i = 1; i <= n - 1; ++i) bits.push_back(path.heights[i] < 0 ? '1' : '0');
  return BinaryWord(bits);
}

int d_plus(const LatticePath& path) {
  int up = 0;
  for (size_t i = 1; i < path.heights.size(); ++i)
    if (path.heights[i] > path.heights[i - 1]) ++up;
  return up;
}

int d_minus(const LatticePath& path) { return path.length() - d_plus(path); }

std::vector<LatticePath> paths_with_word(const BinaryWord& e) {
  std::vector<LatticePath> out;
  for (LatticePath& p : all_paths(e.length() + 1))
    if (negativity_word(p) == e) out.push_back(std::move(p));
  return out;
}

QPoly upsilon(const BinaryWord& e) {
  QPoly sum;
  for (const LatticePath& p : paths_with_word(e)) {
    int dp = d_plus(p);
    sum.add_term((dp % 2 == 0) ? 1 : -1, dp);  // (-q)^{d_+}
  }
  if (e.count(0) % 2 != 0) sum = -sum;  // (-1)^{m_0(E)}
  return sum;
}

std::vector<std::pair<BinaryWord, int>> j_set(const BinaryWord& t) {
  std::vector<std::pair<BinaryWord, int>> out;
  if (t.empty()) {
    out.push_back({BinaryWord(), 1});
    return out;
  }
  if (!t.sparse()) return out;
  int m = t.length();
  std::vector<int> s = support_frame(t);
  int tcount = static_cast<int>(s.size()) - 2;
  int n = m + 1;

  for (const BinaryWord& e : all_words(m)) {
    std::vector<int> boundary = e.boundary();
    bool ok = true;
    int sign_exp = 0;
    for (int j = 0; j <= tcount && ok; ++j) {
      std::vector<int> inside;
      for (int x : boundary)
        if (x > s[j] && x < s[j + 1]) inside.push_back(x);
      if (j < tcount) {
        // the first t windows are hit exactly once
        if (inside.size() != 1) {
          ok = false;
          break;
        }
        sign_exp += s[j + 1] - inside[0] - 1;
      } else {
        // the final window holds at most two points; with two, they agree
        // with n - 1 mod 2
        if (inside.size() > 2) ok = false;
        if (inside.size() == 2 && (inside[0] - (n - 1)) % 2 != 0) ok = false;
      }
    }
    if (ok) out.push_back({e, (sign_exp % 2 == 0) ? 1 : -1});
  }
  return out;
}

QPoly omega_tilde(const BinaryWord& t) {
  if (!t.empty() && !t.sparse())
    throw std::invalid_argument("omega_tilde: T must be sparse or empty");
  QPoly sum;
  for (const auto& [e, sign] : j_set(t)) {
    QPoly u = upsilon(e);
    sum += (sign > 0) ? u : -u;
  }
  return sum;
}

std::vector<LatticePath> lattice_paths(const BinaryWord& t) {
  std::set<BinaryWord> members;
  for (const auto& [e, sign] : j_set(t)) members.insert(e);
  std::vector<LatticePath> out;
  for (LatticePath& p : all_paths(t.length() + 1))
    if (members.count(negativity_word(p))) out.push_back(std::move(p));
  return out;
}

std::vector<LatticePath> lattice_paths_reduced(const BinaryWord& t) {
  int n = t.length() + 1;
  std::vector<int> s = support_frame(t);
  int tcount = static_cast<int>(s.size()) - 2;
  std::vector<LatticePath> out;
  for (LatticePath& p : lattice_paths(t)) {
    bool drop = false;
    for (int i = 1; i <= tcount && !drop; ++i)
      if (p.heights[s[i] + 1] == 0) drop = true;  // L_0: zero right after a support point
    if (!drop && n % 2 == 0) {
      // L_0': zero anywhere in [s_t + 1, n] (final stretch), even length only
      for (int x = s[tcount] + 1; x <= n && !drop; ++x)
        if (p.heights[x] == 0) drop = true;
    }
    if (!drop) out.push_back(std::move(p));
  }
  return out;
}

std::vector<LatticePath> slaloms(const BinaryWord& t) {
  if (!t.empty() && !t.sparse())
    throw std::invalid_argument("slaloms: T must be sparse or empty");
  int n = t.length() + 1;
  std::vector<int> s = support_frame(t);
  int tcount = static_cast<int>(s.size()) - 2;

  std::vector<LatticePath> from_reduced;
  for (LatticePath& p : lattice_paths_reduced(t))
    if (p.end() > 0) from_reduced.push_back(std::move(p));

  // independent geometric characterization
  std::vector<LatticePath> geometric;
  for (LatticePath& p : all_paths(n)) {
    bool ok = true;
    for (int i = 1; i <= tcount && ok; ++i)
      if (p.heights[s[i] + 1] == 0) ok = false;
    for (int i = 1; i <= tcount && ok; ++i) {
      // exactly one crossing of y = -1/2 with abscissa in [s_{i-1}+1, s_i]
      int crossings = 0;
      for (int j = s[i - 1] + 1; j + 1 <= s[i]; ++j) {
        int a = p.heights[j], b = p.heights[j + 1];
        if ((a == 0 && b == -1) || (a == -1 && b == 0)) ++crossings;
      }
      if (crossings != 1) ok = false;
    }
    if (ok) {
      int floor = (n % 2 == 0) ? 1 : 0;  // chi_even(n)
      for (int x = s[tcount] + 2; x <= n && ok; ++x)
        if (p.heights[x] < floor) ok = false;
    }
    // the positive endpoint is part of the definition; when T ends in 1
    // the stay-above constraint ranges over nothing and cannot imply it
    if (ok && p.end() <= 0) ok = false;
    if (ok) geometric.push_back(std::move(p));
  }

  auto key = [](const LatticePath& p) { return p.heights; };
  std::sort(from_reduced.begin(), from_reduced.end(),
            [&](const LatticePath& a, const LatticePath& b) { return key(a) < key(b); });
  std::sort(geometric.begin(), geometric.end(),
            [&](const LatticePath& a, const LatticePath& b) { return key(a) < key(b); });
  if (from_reduced.size() != geometric.size() ||
      !std::equal(from_reduced.begin(), from_reduced.end(), geometric.begin(),
                  [&](const LatticePath& a, const LatticePath& b) {
                    return a.heights == b.heights;
                  }))
    throw std::logic_error("slaloms: characterizations disagree for T=" + t.str());
  return from_reduced;
}

QPoly omega(const BinaryWord& t) {
  QPoly sum;
  for (const LatticePath& p : slaloms(t)) {
    int dm = d_minus(p);
    sum.add_term((dm % 2 == 0) ? 1 : -1, dm);  // (-q)^{d_-}
  }
  int prefix = 0;
  for (int si : t.support()) prefix += si + 1;  // s_1 + ... + s_t + t
  if (prefix % 2 != 0) sum = -sum;
  return sum;
}

int epsilon_stat(const BinaryWord& t, const LatticePath& path) {
  std::vector<int> s = support_frame(t);
  int tcount = static_cast<int>(s.size()) - 2;
  std::vector<int> boundary = negativity_word(path).boundary();
  int acc = 0;
  for (int h = 1; h <= tcount; ++h) {
    int found = -1;
    for (int x : boundary)
      if (x > s[h - 1] && x < s[h]) {
        if (found >= 0) throw std::invalid_argument("epsilon_stat: path not in L(T)");
        found = x;
      }
    if (found < 0) throw std::invalid_argument("epsilon_stat: path not in L(T)");
    acc += s[h] - found - 1;
  }
  return acc;
}

int eta_stat(const LatticePath& path) {
  int n = path.length(), acc = 0;
  for (int i = 1; i <= n - 1; ++i)
    if (path.heights[i] >= 0) ++acc;
  return acc;
}

}  // namespace klpath
