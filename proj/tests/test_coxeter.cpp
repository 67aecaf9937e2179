#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>

#include "klpath/bruhat.hpp"
#include "klpath/coxeter.hpp"

using namespace klpath;

namespace {

// every element of a finite group by breadth-first closure
std::vector<CoxElem> enumerate_group(const CoxSystem& sys) {
  std::vector<CoxElem> out{sys.identity()};
  std::set<std::vector<Int>> seen{out[0].matrix()};
  for (size_t head = 0; head < out.size(); ++head) {
    CoxElem w = out[head];
    for (int i = 0; i < sys.rank(); ++i) {
      CoxElem next = sys.multiply(w, sys.generator(i));
      if (seen.insert(next.matrix()).second) out.push_back(next);
    }
  }
  return out;
}

// length as an inversion count: positive roots sent to negative ones
int inversion_length(const CoxSystem& sys, const std::vector<Root>& positive,
                     const CoxElem& w) {
  int count = 0;
  for (const Root& beta : positive)
    if (is_negative_root(sys.apply(w, beta))) ++count;
  return count;
}

std::vector<Root> positive_roots(const CoxSystem& sys) {
  std::set<Root> roots;
  std::vector<Root> queue;
  for (int i = 0; i < sys.rank(); ++i) {
    roots.insert(sys.simple_root(i));
    queue.push_back(sys.simple_root(i));
  }
  while (!queue.empty()) {
    Root beta = queue.back();
    queue.pop_back();
    for (int i = 0; i < sys.rank(); ++i) {
      Root img = sys.apply(sys.generator(i), beta);
      if (is_positive_root(img) && roots.insert(img).second) queue.push_back(img);
    }
  }
  return {roots.begin(), roots.end()};
}

// subword criterion against a fixed reduced word of v
bool subword_leq(const CoxSystem& sys, const CoxElem& u, const CoxElem& v) {
  const std::vector<int>& big = v.word();
  int n = static_cast<int>(big.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(big[i]);
    if (sys.from_word(sub) == u) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("word normalization") {
  const CoxSystem a3 = CoxSystem::preset("A3");
  CHECK(a3.from_word({}).is_identity());
  CHECK(a3.from_word({0, 0}).is_identity());
  CHECK(a3.from_word({0, 1, 0}) == a3.from_word({1, 0, 1}));
  CHECK_THROWS(a3.from_word({3}));
}

TEST_CASE("generators are involutions across presets") {
  for (const char* name : {"A3", "B2", "B3", "K3"}) {
    const CoxSystem sys = CoxSystem::preset(name);
    for (int i = 0; i < sys.rank(); ++i)
      CHECK(sys.multiply(sys.generator(i), sys.generator(i)).is_identity());
  }
}

TEST_CASE("braid relations hold in the representation") {
  for (const char* name : {"A3", "B2", "K3"}) {
    const CoxSystem sys = CoxSystem::preset(name);
    for (int i = 0; i < sys.rank(); ++i)
      for (int j = 0; j < sys.rank(); ++j) {
        if (i == j) continue;
        int m = sys.cox_entry(i, j);
        std::vector<int> lhs, rhs;
        for (int k = 0; k < m; ++k) {
          lhs.push_back(k % 2 == 0 ? i : j);
          rhs.push_back(k % 2 == 0 ? j : i);
        }
        CHECK(sys.from_word(lhs) == sys.from_word(rhs));
      }
  }
}

TEST_CASE("length equals the inversion count on finite groups") {
  for (const char* name : {"A3", "B2"}) {
    const CoxSystem sys = CoxSystem::preset(name);
    auto roots = positive_roots(sys);
    for (const CoxElem& w : enumerate_group(sys))
      CHECK(w.length() == inversion_length(sys, roots, w));
  }
}

TEST_CASE("longest element of A3") {
  const CoxSystem a3 = CoxSystem::preset("A3");
  CHECK(a3.from_word({0, 1, 0, 2, 1, 0}).length() == 6);
  CHECK(a3.from_word({0, 1, 0}).length() == 3);
}

TEST_CASE("length changes by one under generators") {
  const CoxSystem sys = CoxSystem::preset("A3");
  for (const CoxElem& w : enumerate_group(sys))
    for (int i = 0; i < sys.rank(); ++i) {
      int diff = sys.multiply(sys.generator(i), w).length() - w.length();
      CHECK((diff == 1 || diff == -1));
    }
}

TEST_CASE("descents") {
  const CoxSystem a3 = CoxSystem::preset("A3");
  CHECK(a3.descents(a3.identity(), Side::Left).empty());
  CHECK(a3.descents(a3.generator(0), Side::Left) == std::set<int>{0});
  CHECK(a3.descents(a3.from_word({0, 1}), Side::Left) == std::set<int>{0});
  CHECK(a3.descents(a3.from_word({0, 1}), Side::Right) == std::set<int>{1});
  // one-line-notation cross-check in S4: descents of w detect s_i w < w
  for (const CoxElem& w : enumerate_group(a3))
    for (int i = 0; i < 3; ++i) {
      bool drop = a3.multiply(a3.generator(i), w).length() < w.length();
      CHECK(a3.has_descent(w, i, Side::Left) == drop);
    }
}

TEST_CASE("bruhat order matches the subword criterion exhaustively") {
  for (const char* name : {"A2", "A3", "B2"}) {
    const CoxSystem sys = CoxSystem::preset(name);
    auto group = enumerate_group(sys);
    for (const CoxElem& u : group)
      for (const CoxElem& v : group)
        CHECK(sys.bruhat_leq(u, v) == subword_leq(sys, u, v));
  }
}

TEST_CASE("identity is the bruhat minimum") {
  const CoxSystem a3 = CoxSystem::preset("A3");
  for (const CoxElem& v : enumerate_group(a3)) CHECK(a3.bruhat_leq(a3.identity(), v));
  CHECK_FALSE(a3.bruhat_leq(a3.generator(0), a3.generator(1)));
}

TEST_CASE("reflection detection") {
  const CoxSystem a3 = CoxSystem::preset("A3");
  auto r0 = a3.as_reflection(a3.generator(0));
  REQUIRE(r0.has_value());
  CHECK(*r0 == Root{1, 0, 0});
  auto r010 = a3.as_reflection(a3.from_word({0, 1, 0}));
  REQUIRE(r010.has_value());
  CHECK(*r010 == Root{1, 1, 0});
  CHECK_FALSE(a3.as_reflection(a3.from_word({0, 1})).has_value());
  CHECK_FALSE(a3.as_reflection(a3.identity()).has_value());
}

TEST_CASE("reflections rebuild from their roots") {
  for (const char* name : {"A3", "B2", "B3"}) {
    const CoxSystem sys = CoxSystem::preset(name);
    int count = 0;
    for (const CoxElem& w : enumerate_group(sys)) {
      auto root = sys.as_reflection(w);
      if (!root) continue;
      ++count;
      CHECK(sys.reflection_from_root(*root) == w);
    }
    if (std::string(name) == "A3") CHECK(count == 6);
  }
}

TEST_CASE("A3 length distribution") {
  const CoxSystem a3 = CoxSystem::preset("A3");
  std::map<int, int> hist;
  for (const CoxElem& w : enumerate_group(a3)) hist[w.length()]++;
  CHECK(hist == std::map<int, int>{{0, 1}, {1, 3}, {2, 5}, {3, 6}, {4, 5}, {5, 3}, {6, 1}});
}

TEST_CASE("positive roots stay sign-coherent") {
  for (const char* name : {"A3", "B3"}) {
    const CoxSystem sys = CoxSystem::preset(name);
    for (const CoxElem& w : enumerate_group(sys))
      for (int i = 0; i < sys.rank(); ++i) {
        Root img = sys.apply(w, sys.simple_root(i));
        CHECK((is_positive_root(img) || is_negative_root(img)));
      }
  }
}

TEST_CASE("matrix file round trip") {
  const char* path = "coxeter_matrix_test.txt";
  {
    std::ofstream out(path);
    out << "3\n1 3 2\n3 1 inf\n2 inf 1\n";
  }
  const CoxSystem sys = CoxSystem::from_file(path);
  CHECK(sys.rank() == 3);
  CHECK(sys.cox_entry(1, 2) == CoxSystem::kInfinity);
  CHECK(sys.multiply(sys.generator(1), sys.generator(1)).is_identity());
  // infinite order: (s2 s3)^k never returns to e at small k
  CoxElem w = sys.identity();
  for (int k = 0; k < 8; ++k) {
    w = sys.multiply(w, sys.from_word({1, 2}));
    CHECK_FALSE(w.is_identity());
  }
  std::remove(path);
}

TEST_CASE("invalid matrices are rejected") {
  CHECK_THROWS(CoxSystem::from_rows({{1, 5}, {5, 1}}));
  CHECK_THROWS(CoxSystem::from_rows({{1, 3}, {2, 1}}));
  CHECK_THROWS(CoxSystem::from_rows({{2, 3}, {3, 1}}));
  CHECK_THROWS(CoxSystem::preset("C3"));
  CHECK_THROWS(CoxSystem::preset("A0"));
}
