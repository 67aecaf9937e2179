#include "klpath/reflection_order.hpp"

#include <stdexcept>

namespace klpath {

struct RefOrder::Node {
  const CoxSystem* sys = nullptr;

  // weight-order data
  std::vector<Rat> p;
  std::vector<int> indexing;
  std::optional<RefOrder> inner;

  // lower-conjugate data; when conj_parent is set the weight fields are unused
  std::optional<RefOrder> conj_parent;
  int conj_s = -1;

  mutable std::map<std::vector<Int>, Root> root_memo;  // reflection matrix -> root

  Rat weight_of(const Root& b) const {
    Rat acc(0);
    for (size_t i = 0; i < p.size(); ++i)
      if (b[i] != 0) acc += Rat(b[i]) * p[i];
    return acc;
  }

  bool less(const Root& a, const Root& b) const {
    if (a == b) return false;
    if (conj_parent) {
      const Root as = sys->simple_root(conj_s);
      if (a == as) return true;
      if (b == as) return false;
      const CoxElem s = sys->generator(conj_s);
      return conj_parent->less(sys->apply(s, a), sys->apply(s, b));
    }
    Rat pa = weight_of(a), pb = weight_of(b);
    bool za = pa.is_zero(), zb = pb.is_zero();
    if (za && zb) {
      if (!inner) throw std::logic_error("RefOrder: missing inner ordering");
      return inner->less(a, b);
    }
    if (za != zb) return zb;  // positive-weight roots precede zero-weight ones
    for (int idx : indexing) {
      Rat lhs = Rat(a[idx]) / pa, rhs = Rat(b[idx]) / pb;
      if (lhs < rhs) return true;
      if (rhs < lhs) return false;
    }
    throw std::logic_error("RefOrder: tie between distinct roots");
  }
};

RefOrder RefOrder::weight_order(const CoxSystem& sys, std::vector<Rat> p,
                                std::vector<int> indexing,
                                std::optional<RefOrder> inner) {
  if (static_cast<int>(p.size()) != sys.rank())
    throw std::invalid_argument("RefOrder: weight size mismatch");
  if (static_cast<int>(indexing.size()) != sys.rank())
    throw std::invalid_argument("RefOrder: indexing size mismatch");
  bool has_zero = false;
  for (const Rat& w : p) {
    if (w < Rat(0)) throw std::invalid_argument("RefOrder: negative weight");
    if (w.is_zero()) has_zero = true;
  }
  if (has_zero && !inner)
    throw std::invalid_argument("RefOrder: zero-weight simples need an inner ordering");
  auto node = std::make_shared<Node>();
  node->sys = &sys;
  node->p = std::move(p);
  node->indexing = std::move(indexing);
  node->inner = std::move(inner);
  return RefOrder(std::move(node));
}

RefOrder RefOrder::height_order(const CoxSystem& sys) {
  std::vector<Rat> p(sys.rank(), Rat(1));
  std::vector<int> idx(sys.rank());
  for (int i = 0; i < sys.rank(); ++i) idx[i] = i;
  return weight_order(sys, std::move(p), std::move(idx));
}

RefOrder RefOrder::good_order(const CoxSystem& sys, int s) {
  if (s < 0 || s >= sys.rank()) throw std::out_of_range("RefOrder: generator index");
  std::vector<Rat> p(sys.rank(), Rat(1));
  p[s] = Rat(0);
  std::vector<int> idx;
  for (int i = 0; i < sys.rank(); ++i)
    if (i != s) idx.push_back(i);
  idx.push_back(s);
  // the zero-weight parabolic is <s>; only alpha_s lives there, so any
  // total ordering serves as the inner one
  return weight_order(sys, std::move(p), std::move(idx), height_order(sys));
}

RefOrder RefOrder::biparabolic_order(const CoxSystem& sys, int r, int s) {
  if (r == s) throw std::invalid_argument("RefOrder: r and s must differ");
  std::vector<Rat> p(sys.rank(), Rat(1));
  p[r] = Rat(2);
  std::vector<int> idx{s, r};
  for (int i = 0; i < sys.rank(); ++i)
    if (i != r && i != s) idx.push_back(i);
  return weight_order(sys, std::move(p), std::move(idx));
}

RefOrder RefOrder::lower_conjugate(int s) const {
  if (s < 0 || s >= node_->sys->rank())
    throw std::out_of_range("RefOrder: generator index");
  auto node = std::make_shared<Node>();
  node->sys = node_->sys;
  node->conj_parent = *this;
  node->conj_s = s;
  return RefOrder(std::move(node));
}

bool RefOrder::less(const Root& a, const Root& b) const { return node_->less(a, b); }

bool RefOrder::less(const CoxElem& t1, const CoxElem& t2) const {
  auto lookup = [&](const CoxElem& t) -> const Root& {
    auto it = node_->root_memo.find(t.matrix());
    if (it != node_->root_memo.end()) return it->second;
    auto root = node_->sys->as_reflection(t);
    if (!root) throw std::invalid_argument("RefOrder: element is not a reflection");
    return node_->root_memo.emplace(t.matrix(), std::move(*root)).first->second;
  };
  return node_->less(lookup(t1), lookup(t2));
}

const CoxSystem& RefOrder::system() const { return *node_->sys; }

}  // namespace klpath
