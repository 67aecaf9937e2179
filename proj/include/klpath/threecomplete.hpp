#pragma once

#include <set>
#include <string>
#include <vector>

#include "klpath/coxeter.hpp"
#include "klpath/ncpoly.hpp"

namespace klpath {

bool is_three_complete(const CoxSystem& sys);

// Orbit coordinates of the first simple root: c_i(w) from
// w(alpha_1) = sum c_i alpha_i and d_i(w) = 2 c_i - sum_{k != i} c_k.
// Defined for elements of the parabolic avoiding the first generator.
struct DVector {
  std::vector<Int> c, d;
};
DVector d_vector(const CoxSystem& sys, const CoxElem& w);

// {i >= 2 : d_i(w) > 0} as 0-based generator indices; equals the left
// descent set of w within the parabolic
std::set<int> descents_via_d(const CoxSystem& sys, const CoxElem& w);

// elements of the parabolic avoiding the first generator, up to length cap
std::vector<CoxElem> parabolic_ball(const CoxSystem& sys, int max_length);

// the W_n family in the 3-complete group of rank n+1:
// W_0 = {s_1}, W_1 = {s_1 s_2}, and recursively w s_{n+1} and s_{n+1} w s_{n+1}
std::vector<std::vector<int>> wn_words(int n);
std::vector<CoxElem> wn_family(const CoxSystem& sys, int n);

// the cd-polynomial family P_{n,j}, j in [f_{n+1}]:
// P_{0,1} = 1, P_{1,1} = c, then c P + P' on the first block and
// (d - 1) P on the second
std::vector<CdPoly> pn_family(int n);

// rank over Q of the degree-n homogeneous parts of (d-1)^k P_{n,j}
int mainhomo_rank(int n, int k);

struct CheckReport {
  struct Item {
    std::string name;
    bool pass;
  };
  std::vector<Item> items;
  bool all_pass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};

// pyramid identities over A3 intervals with fresh generators appended
CheckReport check_pyramid(int max_interval_length);
// the svs + d identity in the rank-4 3-complete group
CheckReport check_finalsvs(int max_v_length);
// the [s, svs] expansion over the W_{n-1} family, n up to the cap
CheckReport check_svs_expansion(int max_n);

struct SpanResult {
  int n = 0;
  int rank = 0;
  int expected = 0;  // sum of f_{i+1} over i <= n with i = n mod 2
  std::vector<std::string> pool;  // description of the intervals used
  bool pass() const { return rank == expected; }
};
// span of directly computed complete cd-indices of rank-(n+1) intervals:
// lower intervals [e, v] for v in W_n plus [s_{n+1}, s_{n+1} v s_{n+1}]
// for v in W_{n-1}
SpanResult conjecture_span(int n);

struct KernelResult {
  int n = 0, k = 0;
  int rank = 0, cols = 0;
  bool pass() const { return rank == cols; }
};
// kernel of the matrix b(e, v)_T over v in W_{n+2k-1}, T sparse of
// length n; a zero kernel means no linear relation survives
KernelResult norel_kernel(int n, int k);

}  // namespace klpath
