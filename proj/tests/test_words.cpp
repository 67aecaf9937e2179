#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klpath/binary_word.hpp"
#include "klpath/qpoly.hpp"

using namespace klpath;

TEST_CASE("sparse membership") {
  CHECK(BinaryWord().sparse());
  CHECK(BinaryWord("0").sparse());
  CHECK(BinaryWord("01").sparse());
  CHECK(BinaryWord("00100").sparse());
  CHECK(BinaryWord("001001").sparse());
  CHECK_FALSE(BinaryWord("1").sparse());
  CHECK_FALSE(BinaryWord("011").sparse());
  CHECK_FALSE(BinaryWord("10").sparse());
  CHECK_FALSE(BinaryWord("0110").sparse());
}

TEST_CASE("sparse counts follow the Fibonacci numbers") {
  for (int n = 0; n <= 12; ++n)
    CHECK(static_cast<Int>(sparse_words(n).size()) == fibonacci(n + 1));
}

TEST_CASE("involutions") {
  for (const BinaryWord& w : all_words(6)) {
    CHECK(w.complement().complement() == w);
    CHECK(w.opposite().opposite() == w);
    CHECK(w.flip_last().flip_last() == w);
  }
}

TEST_CASE("boundary and compositions") {
  BinaryWord w("00110");
  CHECK(w.boundary() == std::vector<int>{2, 4, 5});
  CHECK(w.exponent_composition() == std::vector<int>{2, 2, 1});
  // boundary positions reconstruct the partial sums of the composition
  for (const BinaryWord& e : all_words(7)) {
    auto comp = e.exponent_composition();
    int acc = 0;
    std::vector<int> partial;
    for (int c : comp) partial.push_back(acc += c);
    CHECK(partial == e.boundary());
  }
}

TEST_CASE("oc composition") {
  CHECK(BinaryWord("001010").oc_composition() == std::vector<int>{2, 2, 3});
  CHECK(BinaryWord("0").oc_composition() == std::vector<int>{2});
  CHECK(BinaryWord().oc_composition() == std::vector<int>{1});
}

TEST_CASE("support order") {
  CHECK(BinaryWord("01010").support() == std::vector<int>{2, 4});
  CHECK(BinaryWord("01010").count(1) == 2);
  CHECK(BinaryWord("01010").count(0) == 3);
}

TEST_CASE("containment order") {
  CHECK(BinaryWord("010").leq(BinaryWord("011")));
  CHECK_FALSE(BinaryWord("100").leq(BinaryWord("011")));
  CHECK_THROWS(BinaryWord("10").leq(BinaryWord("100")));
}

TEST_CASE("word ordering groups by length") {
  CHECK(BinaryWord("11") < BinaryWord("000"));
  CHECK(BinaryWord("001") < BinaryWord("010"));
}

TEST_CASE("polynomial printing") {
  QPoly p;
  p.add_term(-1, 1);
  p.add_term(2, 2);
  CHECK(p.str() == "-1*q + 2*q^2");
  CHECK(QPoly(1).str() == "1");
  CHECK(QPoly().str() == "0");
  QPoly skew;
  skew.add_term(-1, 1);
  skew.add_term(2, 2);
  skew.add_term(-2, 4);
  skew.add_term(1, 5);
  CHECK(skew.str() == "-1*q + 2*q^2 - 2*q^4 + 1*q^5");
}

TEST_CASE("half-integer exponents") {
  HalfLaurent h;
  h.add_term(1, -1);
  h.add_term(-1, 1);
  CHECK(h.str() == "1*q^(-1/2) - 1*q^(1/2)");
  CHECK(h.coef(-1) == 1);
  HalfLaurent g = HalfLaurent::from_qpoly(QPoly(1), -4);
  CHECK(g.str() == "1*q^-2");
}

TEST_CASE("reciprocal") {
  QPoly p;  // 1 + 2q
  p.add_term(1, 0);
  p.add_term(2, 1);
  QPoly r = p.reciprocal(3);  // q^3 (1 + 2/q) = q^3 + 2 q^2
  CHECK(r.coef(3) == 1);
  CHECK(r.coef(2) == 2);
  CHECK(r.coef(0) == 0);
}
