#include "klpath/bb_relations.hpp"

namespace klpath {

Rat coeff_or_zero(const std::map<BinaryWord, Rat>& m, const BinaryWord& w) {
  auto it = m.find(w);
  return it == m.end() ? Rat(0) : it->second;
}

std::optional<BBWitness> bayer_billera_witness(const std::map<BinaryWord, Rat>& a,
                                               int n) {
  for (int le = 0; le <= n - 1; ++le) {
    for (const BinaryWord& e : all_words(le)) {
      if (le > 0 && e.bit(le) != 1) continue;
      for (int j = 1; j <= n - le; ++j) {
        int lf = n - le - j;
        for (const BinaryWord& f : all_words(lf)) {
          if (lf > 0 && f.bit(1) != 1) continue;
          Rat lhs(0);
          for (int i = 1; i <= j; ++i) {
            std::string mid(j, '0');
            mid[i - 1] = '1';
            Rat term = coeff_or_zero(a, e.concat(BinaryWord(mid)).concat(f));
            lhs += (i % 2 == 1) ? term : -term;
          }
          Rat rhs = (j % 2 == 1)
                        ? Rat(2) * coeff_or_zero(a, e.concat(BinaryWord::zeros(j)).concat(f))
                        : Rat(0);
          if (!(lhs == rhs)) return BBWitness{e, f, j};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<BBWitness> dual_relations_witness(const std::map<BinaryWord, Rat>& b,
                                                int n) {
  for (const BinaryWord& w : all_words(n)) {
    for (int k = 0; k < n; ++k) {  // k = |E|; F nonempty, else trivial
      BinaryWord e = w.prefix(k);
      BinaryWord f = w.suffix(n - k);
      Rat lhs = coeff_or_zero(b, e.concat(f)) + coeff_or_zero(b, e.flip_last().concat(f));
      BinaryWord fbar = f.complement();
      Rat rhs =
          coeff_or_zero(b, e.concat(fbar)) + coeff_or_zero(b, e.flip_last().concat(fbar));
      if (!(lhs == rhs)) return BBWitness{e, f, 0};
    }
  }
  return std::nullopt;
}

}  // namespace klpath
