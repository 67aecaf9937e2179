#include "klpath/ncpoly.hpp"

#include <algorithm>

#include "klpath/bb_relations.hpp"
#include "klpath/linalg.hpp"

namespace klpath {

namespace {

void validate_word(const std::string& w, const char* alphabet) {
  for (char c : w)
    if (c != alphabet[0] && c != alphabet[1])
      throw std::invalid_argument(std::string("bad word character '") + c + "'");
}

template <typename P>
P generic_add(const P& x, const P& y) {
  P r = x;
  for (const auto& [w, c] : y.terms()) r.add(w, c);
  return r;
}

template <typename P>
P generic_mul(const P& x, const P& y) {
  P r;
  for (const auto& [w1, c1] : x.terms())
    for (const auto& [w2, c2] : y.terms()) r.add(w1 + w2, c1 * c2);
  return r;
}

std::string ab_word(const BinaryWord& e) {
  std::string w;
  for (int i = 1; i <= e.length(); ++i) w.push_back(e.bit(i) ? 'b' : 'a');
  return w;
}

}  // namespace

NCPoly NCPoly::word(const std::string& w, Int coef) {
  validate_word(w, "ab");
  NCPoly p;
  p.add(w, coef);
  return p;
}

NCPoly NCPoly::mu(const BinaryWord& e, Int coef) {
  NCPoly p;
  p.add(ab_word(e), coef);
  return p;
}

Int NCPoly::coef(const std::string& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? 0 : it->second;
}

void NCPoly::add(const std::string& w, Int c) {
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(w, c);
  if (!fresh && (it->second += c) == 0) t_.erase(it);
}

NCPoly operator+(const NCPoly& x, const NCPoly& y) { return generic_add(x, y); }
NCPoly operator-(const NCPoly& x, const NCPoly& y) { return x + (-y); }
NCPoly operator*(const NCPoly& x, const NCPoly& y) { return generic_mul(x, y); }

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [w, c] : r.t_) c = -c;
  return r;
}

NCPoly NCPoly::homogeneous(int degree) const {
  NCPoly r;
  for (const auto& [w, c] : t_)
    if (static_cast<int>(w.size()) == degree) r.add(w, c);
  return r;
}

int NCPoly::max_degree() const {
  int d = -1;
  for (const auto& [w, c] : t_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

std::string NCPoly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : t_) {
    Int v = c;
    if (first) {
      if (v < 0) {
        out += "-";
        v = -v;
      }
    } else {
      out += (v < 0) ? " - " : " + ";
      if (v < 0) v = -v;
    }
    std::string mono = w.empty() ? "1" : w;
    if (v == 1 && !w.empty())
      out += mono;
    else if (w.empty())
      out += std::to_string(v);
    else
      out += "(" + std::to_string(v) + ")" + mono;
    first = false;
  }
  return out;
}

CdPoly CdPoly::word(const std::string& w, Int coef) {
  validate_word(w, "cd");
  CdPoly p;
  p.add(w, coef);
  return p;
}

Int CdPoly::coef(const std::string& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? 0 : it->second;
}

void CdPoly::add(const std::string& w, Int c) {
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(w, c);
  if (!fresh && (it->second += c) == 0) t_.erase(it);
}

CdPoly operator+(const CdPoly& x, const CdPoly& y) { return generic_add(x, y); }
CdPoly operator-(const CdPoly& x, const CdPoly& y) { return x + (-y); }
CdPoly operator*(const CdPoly& x, const CdPoly& y) { return generic_mul(x, y); }

CdPoly CdPoly::operator-() const {
  CdPoly r = *this;
  for (auto& [w, c] : r.t_) c = -c;
  return r;
}

int CdPoly::word_degree(const std::string& w) {
  int d = 0;
  for (char c : w) d += (c == 'd') ? 2 : 1;
  return d;
}

CdPoly CdPoly::homogeneous(int degree) const {
  CdPoly r;
  for (const auto& [w, c] : t_)
    if (word_degree(w) == degree) r.add(w, c);
  return r;
}

int CdPoly::max_degree() const {
  int d = -1;
  for (const auto& [w, c] : t_) d = std::max(d, word_degree(w));
  return d;
}

std::string CdPoly::str() const {
  if (t_.empty()) return "0";
  // sort terms by (degree, word)
  std::vector<std::pair<std::string, Int>> terms(t_.begin(), t_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    int dx = word_degree(x.first), dy = word_degree(y.first);
    if (dx != dy) return dx < dy;
    return x.first < y.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms) {
    Int v = c;
    if (first) {
      if (v < 0) {
        out += "-";
        v = -v;
      }
    } else {
      out += (v < 0) ? " - " : " + ";
      if (v < 0) v = -v;
    }
    // compress runs: ccd -> c^2d
    std::string mono;
    for (size_t i = 0; i < w.size();) {
      size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      mono.push_back(w[i]);
      if (j - i > 1) mono += "^" + std::to_string(j - i);
      i = j;
    }
    if (w.empty())
      out += std::to_string(v);
    else if (v == 1)
      out += mono;
    else
      out += "(" + std::to_string(v) + ")" + mono;
    first = false;
  }
  return out;
}

NCPoly expand_cd(const CdPoly& p) {
  static const NCPoly c = NCPoly::word("a") + NCPoly::word("b");
  static const NCPoly d = NCPoly::word("ab") + NCPoly::word("ba");
  NCPoly out;
  for (const auto& [w, coef] : p.terms()) {
    NCPoly term(coef);
    for (char ch : w) term = term * (ch == 'c' ? c : d);
    out += term;
  }
  return out;
}

std::string cd_monomial_for(const BinaryWord& sparse) {
  if (!sparse.sparse()) throw std::invalid_argument("cd_monomial_for: word is not sparse");
  std::string out;
  int i = 1, n = sparse.length();
  while (i <= n) {
    if (i < n && sparse.bit(i) == 0 && sparse.bit(i + 1) == 1) {
      out.push_back('d');
      i += 2;
    } else {
      out.push_back('c');
      i += 1;
    }
  }
  return out;
}

std::vector<std::string> cd_monomials(int degree) {
  std::vector<std::string> out;
  for (const BinaryWord& t : sparse_words(degree)) out.push_back(cd_monomial_for(t));
  std::sort(out.begin(), out.end());
  return out;
}

NCTensor coproduct(const NCPoly& p) {
  NCTensor out;
  for (const auto& [w, c] : p.terms()) {
    for (size_t i = 0; i < w.size(); ++i) {
      auto key = std::make_pair(w.substr(0, i), w.substr(i + 1));
      auto [it, fresh] = out.emplace(key, c);
      if (!fresh && (it->second += c) == 0) out.erase(it);
    }
  }
  return out;
}

NCPoly derive(const NCPoly& x, const NCPoly& y) {
  NCPoly out;
  for (const auto& [pair, c] : coproduct(x))
    for (const auto& [wy, cy] : y.terms()) out.add(pair.first + wy + pair.second, c * cy);
  return out;
}

NCPoly gprime(const NCPoly& p) {
  NCPoly out;
  for (const auto& [w, c] : p.terms())
    for (size_t i = 0; i < w.size(); ++i) {
      std::string img = (w[i] == 'a') ? "ab" : "ba";
      out.add(w.substr(0, i) + img + w.substr(i + 1), c);
    }
  return out;
}

CdPoly gprime(const CdPoly& p) {
  CdPoly out;
  for (const auto& [w, c] : p.terms())
    for (size_t i = 0; i < w.size(); ++i) {
      std::string img = (w[i] == 'c') ? "d" : "dc";
      out.add(w.substr(0, i) + img + w.substr(i + 1), c);
    }
  return out;
}

CdPoly to_cd(const NCPoly& p) {
  CdPoly out;
  for (int n = 0; n <= p.max_degree(); ++n) {
    NCPoly comp = p.homogeneous(n);
    if (comp.is_zero()) continue;
    if (n == 0) {
      out.add("", comp.coef(""));
      continue;
    }
    if (n > 16) throw std::invalid_argument("to_cd: degree above supported bound");

    // certificate first: the coefficient function must satisfy the dual
    // relations, which characterize membership in Z<c, d>
    std::map<BinaryWord, Rat> beta;
    for (const BinaryWord& e : all_words(n)) {
      Int c = comp.coef(ab_word(e));
      if (c != 0) beta[e] = Rat(c);
    }
    if (auto witness = dual_relations_witness(beta, n))
      throw NotCdExpressible(witness->e, witness->f);

    // solve for the cd-coefficients on the sparse coordinates, which are
    // square and nonsingular for each degree
    std::vector<BinaryWord> sparse = sparse_words(n);
    int m = static_cast<int>(sparse.size());
    std::vector<std::string> monos;
    std::vector<NCPoly> expansions;
    for (const BinaryWord& t : sparse) {
      monos.push_back(cd_monomial_for(t));
      expansions.push_back(expand_cd(CdPoly::word(monos.back())));
    }
    QMatrix mat(m, m);
    std::vector<mpq_class> rhs(m);
    for (int r = 0; r < m; ++r) {
      std::string row_word = ab_word(sparse[r]);
      for (int c = 0; c < m; ++c) mat.set(r, c, expansions[c].coef(row_word));
      rhs[r] = static_cast<long>(comp.coef(row_word));
    }
    auto sol = mat.solve(rhs);
    if (!sol) throw std::logic_error("to_cd: singular sparse system");

    NCPoly reconstructed;
    CdPoly comp_cd;
    for (int c = 0; c < m; ++c) {
      mpq_class v = (*sol)[c];
      if (v == 0) continue;
      if (v.get_den() != 1) throw std::logic_error("to_cd: non-integer cd coefficient");
      if (!v.get_num().fits_slong_p()) throw std::overflow_error("to_cd: coefficient overflow");
      Int iv = static_cast<Int>(v.get_num().get_si());
      comp_cd.add(monos[c], iv);
      NCPoly scaled;
      for (const auto& [w, ec] : expansions[c].terms()) scaled.add(w, ec * iv);
      reconstructed += scaled;
    }
    if (!(reconstructed == comp))
      throw std::logic_error("to_cd: reconstruction mismatch after solve");
    out += comp_cd;
  }
  return out;
}

NCPoly complete_ab_index(BruhatContext& ctx, const RefOrder& order, const CoxElem& u,
                         const CoxElem& v) {
  if (!(u.length() < v.length()) || !ctx.leq(u, v))
    throw std::invalid_argument("complete_ab_index: requires u < v");
  BruhatGraph graph(ctx, u, v);
  NCPoly out;
  for (const auto& [e, count] : graph.census(order))
    out += NCPoly::mu(e.opposite(), count);  // m(path) = mu_{E^op}
  return out;
}

CdPoly complete_cd_index(BruhatContext& ctx, const RefOrder& order, const CoxElem& u,
                         const CoxElem& v) {
  return to_cd(complete_ab_index(ctx, order, u, v));
}

}  // namespace klpath
