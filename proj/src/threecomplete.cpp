#include "klpath/threecomplete.hpp"

#include <algorithm>
#include <stdexcept>

#include "klpath/linalg.hpp"

namespace klpath {

bool is_three_complete(const CoxSystem& sys) {
  for (int i = 0; i < sys.rank(); ++i)
    for (int j = 0; j < sys.rank(); ++j)
      if (i != j && sys.cox_entry(i, j) != 3) return false;
  return true;
}

DVector d_vector(const CoxSystem& sys, const CoxElem& w) {
  if (!is_three_complete(sys))
    throw std::invalid_argument("d_vector: system is not 3-complete");
  for (int g : w.word())
    if (g == 0) throw std::invalid_argument("d_vector: element uses the first generator");
  int r = sys.rank();
  DVector out;
  out.c = sys.apply(w, sys.simple_root(0));
  out.d.resize(r);
  Int total = 0;
  for (Int ci : out.c) total += ci;
  for (int i = 0; i < r; ++i) out.d[i] = 2 * out.c[i] - (total - out.c[i]);
  return out;
}

std::set<int> descents_via_d(const CoxSystem& sys, const CoxElem& w) {
  DVector dv = d_vector(sys, w);
  std::set<int> out;
  for (int i = 1; i < sys.rank(); ++i)
    if (dv.d[i] > 0) out.insert(i);
  return out;
}

std::vector<CoxElem> parabolic_ball(const CoxSystem& sys, int max_length) {
  std::vector<CoxElem> out{sys.identity()};
  std::set<std::vector<Int>> seen{out[0].matrix()};
  size_t head = 0;
  while (head < out.size()) {
    CoxElem w = out[head++];
    if (w.length() >= max_length) continue;
    for (int i = 1; i < sys.rank(); ++i) {
      CoxElem next = sys.multiply(sys.generator(i), w);
      if (next.length() != w.length() + 1) continue;
      if (seen.insert(next.matrix()).second) out.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(), [](const CoxElem& a, const CoxElem& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.matrix() < b.matrix();
  });
  return out;
}

std::vector<std::vector<int>> wn_words(int n) {
  if (n < 0) throw std::invalid_argument("wn_words: negative index");
  std::vector<std::vector<std::vector<int>>> w(std::max(2, n + 1));
  w[0] = {{0}};
  if (n >= 1) w[1] = {{0, 1}};
  for (int m = 2; m <= n; ++m) {
    for (const auto& word : w[m - 1]) {
      auto copy = word;
      copy.push_back(m);
      w[m].push_back(std::move(copy));
    }
    for (const auto& word : w[m - 2]) {
      std::vector<int> copy{m};
      copy.insert(copy.end(), word.begin(), word.end());
      copy.push_back(m);
      w[m].push_back(std::move(copy));
    }
  }
  return w[n];
}

std::vector<CoxElem> wn_family(const CoxSystem& sys, int n) {
  if (sys.rank() < n + 1) throw std::invalid_argument("wn_family: rank too small");
  std::vector<CoxElem> out;
  for (const auto& word : wn_words(n)) out.push_back(sys.from_word(word));
  return out;
}

std::vector<CdPoly> pn_family(int n) {
  if (n < 0) throw std::invalid_argument("pn_family: negative index");
  std::vector<std::vector<CdPoly>> p(std::max(2, n + 1));
  p[0] = {CdPoly(1)};
  p[1] = {CdPoly::word("c")};
  static const CdPoly c = CdPoly::word("c");
  static const CdPoly dm1 = CdPoly::word("d") - CdPoly(1);
  for (int m = 2; m <= n; ++m) {
    for (const CdPoly& q : p[m - 1]) p[m].push_back(c * q + gprime(q));
    for (const CdPoly& q : p[m - 2]) p[m].push_back(dm1 * q);
  }
  return p[n];
}

int mainhomo_rank(int n, int k) {
  std::vector<CdPoly> family = pn_family(n);
  CdPoly dpow(1);
  static const CdPoly dm1 = CdPoly::word("d") - CdPoly(1);
  for (int i = 0; i < k; ++i) dpow = dpow * dm1;

  std::vector<std::string> monos = cd_monomials(n);
  std::map<std::string, int> row_of;
  for (size_t i = 0; i < monos.size(); ++i) row_of[monos[i]] = static_cast<int>(i);

  QMatrix mat(static_cast<int>(monos.size()), static_cast<int>(family.size()));
  for (size_t j = 0; j < family.size(); ++j) {
    CdPoly comp = (dpow * family[j]).homogeneous(n);
    for (const auto& [w, coef] : comp.terms()) mat.set(row_of.at(w), static_cast<int>(j), coef);
  }
  return mat.rank();
}

namespace {

NCPoly psi(BruhatContext& ctx, const RefOrder& order, const CoxElem& u, const CoxElem& v) {
  return complete_ab_index(ctx, order, u, v);
}

// the full (finite) parabolic generated by the listed generators
std::vector<CoxElem> parabolic_elements(const CoxSystem& sys, const std::vector<int>& gens) {
  std::vector<CoxElem> out{sys.identity()};
  std::set<std::vector<Int>> seen{out[0].matrix()};
  size_t head = 0;
  while (head < out.size()) {
    CoxElem w = out[head++];
    for (int g : gens) {
      CoxElem next = sys.multiply(w, sys.generator(g));
      if (next.length() != w.length() + 1) continue;
      if (seen.insert(next.matrix()).second) out.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(), [](const CoxElem& a, const CoxElem& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.matrix() < b.matrix();
  });
  return out;
}

// elements strictly between u and v
std::vector<CoxElem> open_interval(BruhatContext& ctx, const CoxElem& u, const CoxElem& v) {
  std::vector<CoxElem> out;
  for (const CoxElem& x : ctx.interval(u, v))
    if (!(x == u) && !(x == v)) out.push_back(x);
  return out;
}

std::string word_name(const CoxElem& w) {
  if (w.word().empty()) return "e";
  std::string s;
  for (int g : w.word()) {
    if (!s.empty()) s += ".";
    s += std::to_string(g + 1);
  }
  return s;
}

}  // namespace

CheckReport check_pyramid(int max_interval_length) {
  CheckReport report;
  const CoxSystem sys = CoxSystem::preset("A5");  // A3 plus two fresh generators
  BruhatContext ctx(sys);
  const RefOrder order = RefOrder::height_order(sys);
  static const NCPoly a = NCPoly::word("a"), b = NCPoly::word("b");
  static const NCPoly cc = a + b, dd = NCPoly::word("ab") + NCPoly::word("ba");

  const std::vector<CoxElem> a3 = parabolic_elements(sys, {0, 1, 2});
  const CoxElem s4 = sys.generator(3), s5 = sys.generator(4);
  for (const CoxElem& u : a3)
    for (const CoxElem& v : a3) {
      int ell = v.length() - u.length();
      if (ell < 1 || ell > max_interval_length) continue;
      if (!ctx.leq(u, v)) continue;
      NCPoly base = psi(ctx, order, u, v);
      NCPoly pyr = psi(ctx, order, u, sys.multiply(v, s4));
      NCPoly pyr5 = psi(ctx, order, u, sys.multiply(v, s5));
      NCPoly left = psi(ctx, order, u, sys.multiply(s4, v));

      NCPoly middle;
      for (const CoxElem& x : open_interval(ctx, u, v))
        middle += psi(ctx, order, u, x) * dd * psi(ctx, order, x, v);
      NCPoly middle_ab;
      NCPoly middle_ba;
      for (const CoxElem& x : open_interval(ctx, u, v)) {
        middle_ab += psi(ctx, order, u, x) * NCPoly::word("ab") * psi(ctx, order, x, v);
        middle_ba += psi(ctx, order, u, x) * NCPoly::word("ba") * psi(ctx, order, x, v);
      }
      std::string tag = " [" + word_name(u) + "," + word_name(v) + "]";

      report.items.push_back(
          {"single-ordering expansion" + tag,
           pyr == b * base + base * a + middle_ab});
      report.items.push_back(
          {"mirrored expansion" + tag, pyr == a * base + base * b + middle_ba});
      report.items.push_back(
          {"averaged pyramid" + tag,
           pyr + pyr == base * cc + cc * base + middle});
      report.items.push_back(
          {"derivation pyramid" + tag,
           pyr + pyr == base * cc + cc * base + derive(base, dd)});
      report.items.push_back(
          {"right corollary" + tag, pyr == cc * base + gprime(base)});
      report.items.push_back(
          {"left corollary" + tag, left == cc * base + gprime(base)});
      report.items.push_back({"independence of s" + tag, pyr == pyr5});
    }
  return report;
}

CheckReport check_finalsvs(int max_v_length) {
  CheckReport report;
  const CoxSystem sys = CoxSystem::preset("K4");
  BruhatContext ctx(sys);
  const RefOrder order = RefOrder::height_order(sys);
  static const NCPoly dd = NCPoly::word("ab") + NCPoly::word("ba");
  const CoxElem e = sys.identity();

  for (auto [s_idx, r_idx] : {std::pair<int, int>{0, 1}, std::pair<int, int>{3, 2}}) {
    const CoxElem s = sys.generator(s_idx), r = sys.generator(r_idx);
    // the parabolic over the remaining two generators
    std::vector<int> others;
    for (int g = 0; g < 4; ++g)
      if (g != s_idx && g != r_idx) others.push_back(g);

    for (const CoxElem& v : parabolic_elements(sys, others)) {
      if (v.is_identity() || v.length() > max_v_length) continue;
      NCPoly lhs = psi(ctx, order, e, sys.multiply(s, sys.multiply(v, s)));
      NCPoly base = psi(ctx, order, e, v);
      NCPoly rhs = psi(ctx, order, e, sys.multiply(r, sys.multiply(v, s)));
      report.items.push_back({"svs identity s=" + std::to_string(s_idx + 1) +
                                  " r=" + std::to_string(r_idx + 1) + " v=" + word_name(v),
                              lhs + dd * base == rhs + base});
    }
  }
  return report;
}

CheckReport check_svs_expansion(int max_n) {
  CheckReport report;
  static const NCPoly cc = NCPoly::word("a") + NCPoly::word("b");
  static const NCPoly dd = NCPoly::word("ab") + NCPoly::word("ba");
  for (int n = 1; n <= max_n; ++n) {
    const CoxSystem sys = CoxSystem::preset("K" + std::to_string(n + 1));
    BruhatContext ctx(sys);
    const RefOrder order = RefOrder::height_order(sys);
    const CoxElem e = sys.identity();
    const CoxElem s = sys.generator(n);  // fresh for every v in W_{n-1}
    for (const CoxElem& v : wn_family(sys, n - 1)) {
      NCPoly lhs = psi(ctx, order, s, sys.multiply(s, sys.multiply(v, s)));
      NCPoly rhs = psi(ctx, order, e, v) * cc;
      for (const CoxElem& x : open_interval(ctx, e, v))
        rhs += psi(ctx, order, e, x) * dd * psi(ctx, order, x, v);
      report.items.push_back(
          {"expansion n=" + std::to_string(n) + " v=" + word_name(v), lhs == rhs});
    }
  }
  return report;
}

namespace {

// coordinates of a cd-polynomial in the space of polynomials with degree
// <= n and degrees of parity n
std::vector<std::pair<std::string, int>> parity_monomials(int n) {
  std::vector<std::pair<std::string, int>> out;
  int idx = 0;
  for (int deg = n % 2; deg <= n; deg += 2)
    for (const std::string& m : cd_monomials(deg)) out.push_back({m, idx++});
  return out;
}

}  // namespace

SpanResult conjecture_span(int n) {
  SpanResult res;
  res.n = n;
  for (int i = n % 2; i <= n; i += 2) res.expected += static_cast<int>(fibonacci(i + 1));

  // one extra generator leaves room for a pyramid over the smaller family
  const CoxSystem sys = CoxSystem::preset("K" + std::to_string(n + 2));
  BruhatContext ctx(sys);
  const RefOrder order = RefOrder::height_order(sys);
  const CoxElem e = sys.identity();

  std::vector<CdPoly> polys;
  for (const CoxElem& v : wn_family(sys, n)) {
    polys.push_back(complete_cd_index(ctx, order, e, v));
    res.pool.push_back("[e," + word_name(v) + "]");
  }
  if (n >= 1) {
    const CoxElem s = sys.generator(n);
    for (const CoxElem& v : wn_family(sys, n - 1)) {
      CoxElem svs = sys.multiply(s, sys.multiply(v, s));
      polys.push_back(complete_cd_index(ctx, order, s, svs));
      res.pool.push_back("[" + word_name(s) + "," + word_name(svs) + "]");
    }
  }
  if (n >= 2) {
    // pyramids over the previous svs family, via the fresh top generator
    const CoxElem s = sys.generator(n - 1), fresh = sys.generator(n + 1);
    for (const CoxElem& v : wn_family(sys, n - 2)) {
      CoxElem svs = sys.multiply(s, sys.multiply(v, s));
      CoxElem top = sys.multiply(svs, fresh);
      polys.push_back(complete_cd_index(ctx, order, s, top));
      res.pool.push_back("[" + word_name(s) + "," + word_name(top) + "]");
    }
  }

  auto monos = parity_monomials(n);
  std::map<std::string, int> col_of(monos.begin(), monos.end());
  QMatrix mat(static_cast<int>(polys.size()), static_cast<int>(monos.size()));
  for (size_t r = 0; r < polys.size(); ++r)
    for (const auto& [w, c] : polys[r].terms()) mat.set(static_cast<int>(r), col_of.at(w), c);
  res.rank = mat.rank();
  return res;
}

KernelResult norel_kernel(int n, int k) {
  KernelResult res;
  res.n = n;
  res.k = k;
  // b(e,v)_T with T of length n counts paths of length n + 1, so the
  // sampled elements must have length n + 1 + 2k: the W_{n+2k} family
  const CoxSystem sys = CoxSystem::preset("K" + std::to_string(n + 2 * k + 1));
  BruhatContext ctx(sys);
  const RefOrder order = RefOrder::height_order(sys);
  const CoxElem e = sys.identity();

  std::vector<BinaryWord> cols = sparse_words(n);
  res.cols = static_cast<int>(cols.size());
  std::map<BinaryWord, int> col_of;
  for (size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = static_cast<int>(i);

  std::vector<CoxElem> family = wn_family(sys, n + 2 * k);
  QMatrix mat(static_cast<int>(family.size()), res.cols);
  for (size_t r = 0; r < family.size(); ++r) {
    BruhatGraph graph(ctx, e, family[r]);
    auto by_len = graph.census_by_length(order);
    auto it = by_len.find(n + 1);
    if (it == by_len.end()) continue;
    for (const auto& [t, count] : it->second)
      if (t.sparse()) mat.set(static_cast<int>(r), col_of.at(t), count);
  }
  res.rank = mat.rank();
  return res;
}

}  // namespace klpath
