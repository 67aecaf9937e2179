#include "klpath/bruhat.hpp"

#include <algorithm>
#include <stdexcept>

namespace klpath {

const std::vector<CoxElem>& BruhatContext::lower_interval(const CoxElem& v) {
  auto it = closure_.find(v.matrix());
  if (it != closure_.end()) return it->second;

  // Downward closure by single-letter deletions: every coatom of z shows
  // up as a length-(l-1) deletion from any reduced word of z.
  std::vector<CoxElem> out;
  std::set<std::vector<Int>> seen;
  std::vector<CoxElem> queue{v};
  seen.insert(v.matrix());
  while (!queue.empty()) {
    CoxElem z = std::move(queue.back());
    queue.pop_back();
    const std::vector<int>& w = z.word();
    for (size_t skip = 0; skip < w.size(); ++skip) {
      std::vector<int> sub;
      sub.reserve(w.size() - 1);
      for (size_t i = 0; i < w.size(); ++i)
        if (i != skip) sub.push_back(w[i]);
      CoxElem y = sys_->from_word(sub);
      if (y.length() != z.length() - 1) continue;
      if (seen.insert(y.matrix()).second) queue.push_back(y);
    }
    out.push_back(std::move(z));
  }
  std::sort(out.begin(), out.end(), [](const CoxElem& a, const CoxElem& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.matrix() < b.matrix();
  });
  member_[v.matrix()] = std::move(seen);
  return closure_.emplace(v.matrix(), std::move(out)).first->second;
}

bool BruhatContext::leq(const CoxElem& u, const CoxElem& v) {
  if (u.length() > v.length()) return false;
  lower_interval(v);
  return member_.at(v.matrix()).count(u.matrix()) > 0;
}

std::vector<CoxElem> BruhatContext::interval(const CoxElem& u, const CoxElem& v) {
  if (!leq(u, v)) throw std::invalid_argument("interval: u is not below v");
  std::vector<CoxElem> out;
  for (const CoxElem& x : lower_interval(v))
    if (leq(u, x)) out.push_back(x);
  return out;
}

BruhatGraph::BruhatGraph(BruhatContext& ctx, const CoxElem& u, const CoxElem& v)
    : sys_(&ctx.system()) {
  elems_ = ctx.interval(u, v);
  rank_ = v.length() - u.length();
  std::map<std::vector<Int>, int> index;
  for (int i = 0; i < size(); ++i) index[elems_[i].matrix()] = i;
  bottom_ = index.at(u.matrix());
  top_ = index.at(v.matrix());

  std::map<Root, int> root_ids;
  up_.assign(size(), {});
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      int diff = elems_[j].length() - elems_[i].length();
      if (diff <= 0 || diff % 2 == 0) continue;  // reflections have odd length
      auto root = sys_->edge_root(elems_[i], elems_[j]);
      if (!root) continue;
      auto [it, fresh] = root_ids.emplace(*root, static_cast<int>(roots_.size()));
      if (fresh) roots_.push_back(*root);
      up_[i].push_back({j, it->second});
    }
}

std::map<int, std::map<BinaryWord, Int>> BruhatGraph::census_by_length(
    const RefOrder& order) const {
  std::map<int, std::map<BinaryWord, Int>> result;
  if (bottom_ == top_) return result;

  int nl = static_cast<int>(roots_.size());
  std::vector<char> greater(size_t(nl) * nl, 0);  // greater[a][b]: a > b
  for (int a = 0; a < nl; ++a)
    for (int b = 0; b < nl; ++b)
      if (a != b) greater[a * nl + b] = order.less(roots_[b], roots_[a]) ? 1 : 0;

  // Partial paths merge on (vertex, last label, descent bits so far);
  // future bits depend on nothing else.
  struct State {
    int vertex;
    int label;
    std::string bits;  // path order: bit i is [t_i > t_{i+1}]
    auto operator<=>(const State&) const = default;
  };
  std::map<State, Int> frontier;
  for (auto [j, l] : up_[bottom_]) frontier[{j, l, ""}] += 1;
  int len = 1;
  while (!frontier.empty()) {
    std::map<BinaryWord, Int>& slot = result[len];
    std::map<State, Int> next;
    for (const auto& [st, cnt] : frontier) {
      if (st.vertex == top_) {
        std::string rev(st.bits.rbegin(), st.bits.rend());
        slot[BinaryWord(rev)] += cnt;
        continue;
      }
      for (auto [j, l] : up_[st.vertex]) {
        std::string bits = st.bits;
        bits.push_back(greater[st.label * nl + l] ? '1' : '0');
        next[{j, l, std::move(bits)}] += cnt;
      }
    }
    if (slot.empty()) result.erase(len);
    frontier = std::move(next);
    ++len;
  }
  return result;
}

std::map<BinaryWord, Int> BruhatGraph::census(const RefOrder& order) const {
  std::map<BinaryWord, Int> merged;
  for (const auto& [len, slot] : census_by_length(order))
    for (const auto& [w, c] : slot) merged[w] += c;
  return merged;
}

std::vector<BruhatPath> BruhatGraph::paths(int k) const {
  std::vector<BruhatPath> out;
  if (k == 0) {
    if (bottom_ == top_) out.push_back({{elems_[bottom_]}, {}});
    return out;
  }
  std::vector<int> vertex_stack{bottom_};
  auto dfs = [&](auto&& self, int at, int remaining) -> void {
    if (remaining == 0) {
      if (at != top_) return;
      BruhatPath p;
      for (int i : vertex_stack) p.vertices.push_back(elems_[i]);
      for (size_t e = 0; e + 1 < vertex_stack.size(); ++e)
        p.labels.push_back(sys_->multiply(sys_->inverse(elems_[vertex_stack[e]]),
                                          elems_[vertex_stack[e + 1]]));
      out.push_back(std::move(p));
      return;
    }
    for (auto [j, l] : up_[at]) {
      vertex_stack.push_back(j);
      self(self, j, remaining - 1);
      vertex_stack.pop_back();
    }
  };
  dfs(dfs, bottom_, k);
  return out;
}

BinaryWord descent_string(const RefOrder& order, const BruhatPath& path) {
  int r = path.length();
  if (r < 1) throw std::invalid_argument("descent_string: empty path");
  std::string bits(r - 1, '0');
  for (int i = 0; i + 1 < r; ++i)
    if (order.less(path.labels[i + 1], path.labels[i])) bits[r - 2 - i] = '1';
  return BinaryWord(bits);
}

std::map<BinaryWord, Int> b_counts(BruhatContext& ctx, const RefOrder& order,
                                   const CoxElem& u, const CoxElem& v, int k) {
  BruhatGraph graph(ctx, u, v);
  auto by_len = graph.census_by_length(order);
  auto it = by_len.find(k);
  if (it == by_len.end()) return {};
  return it->second;
}

std::map<BinaryWord, Int> c_counts(const std::map<BinaryWord, Int>& b, int len) {
  std::map<BinaryWord, Int> c;
  for (const BinaryWord& e : all_words(len)) {
    Int acc = 0;
    for (const auto& [f, cnt] : b)
      if (f.leq(e)) acc += cnt;
    c[e] = acc;
  }
  return c;
}

std::pair<FlagVector, FlagVector> flag_vectors(BruhatContext& ctx, const CoxElem& u,
                                               const CoxElem& v) {
  std::vector<CoxElem> interval = ctx.interval(u, v);
  int rank = v.length() - u.length();
  if (rank < 1) throw std::invalid_argument("flag_vectors: rank must be positive");
  int n = rank - 1;

  std::vector<std::vector<CoxElem>> by_rank(rank + 1);
  for (const CoxElem& x : interval) by_rank[x.length() - u.length()].push_back(x);

  FlagVector f;
  for (const BinaryWord& e : all_words(n)) {
    std::vector<int> levels = e.support();  // ranks hit by the chain
    if (levels.empty()) {
      f[e] = 1;  // the empty chain
      continue;
    }
    std::vector<Int> ways(by_rank[levels[0]].size(), 1);
    for (size_t step = 1; step < levels.size(); ++step) {
      const auto& lo = by_rank[levels[step - 1]];
      const auto& hi = by_rank[levels[step]];
      std::vector<Int> next(hi.size(), 0);
      for (size_t j = 0; j < hi.size(); ++j)
        for (size_t i = 0; i < lo.size(); ++i)
          if (ways[i] != 0 && ctx.leq(lo[i], hi[j])) next[j] += ways[i];
      ways = std::move(next);
    }
    Int total = 0;
    for (Int w : ways) total += w;
    f[e] = total;
  }

  FlagVector h;
  for (const BinaryWord& e : all_words(n)) {
    Int acc = 0;
    for (const auto& [e2, fe2] : f) {
      if (!e2.leq(e)) continue;
      int diff = e.count(1) - e2.count(1);
      acc += (diff % 2 == 0) ? fe2 : -fe2;
    }
    h[e] = acc;
  }
  return {std::move(f), std::move(h)};
}

}  // namespace klpath
