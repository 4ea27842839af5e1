#pragma once

#include <map>
#include <mutex>

#include "eiscalc/rootdata.hpp"

namespace eiscalc {

/*
  q-analog of the partition count: coeffs[m] is the number of ways to
  write the coweight as a sum of positive coroots with total coefficient
  mass m.  As a function of q the value is  sum coeffs[m] q^{-m}.
*/
struct QKostantValue {
    std::map<long, Int> coeffs;
    Int total() const {
        Int t = 0;
        for (auto& [m, c] : coeffs) t += c;
        return t;
    }
    // sum coeffs[m] * x^m evaluated exactly
    Scalar eval(const Scalar& x) const;
};

using WeightMultiset = std::map<Coweight, Int>;

/*
  Representation combinatorics of the dual group, computed inside the
  coweight lattice: the positive coroots play the role of the roots and
  rho (half sum of positive coroots) is the Weyl vector.  Holds the memo
  tables; instances are safe for concurrent use.
*/
class RepCalc {
  public:
    explicit RepCalc(BasedRootDatum datum) : d_(std::move(datum)) {}

    const BasedRootDatum& datum() const { return d_; }

    // number of ways to write lam as a nonnegative sum of positive coroots
    Int kostant_count(const Coweight& lam);
    QKostantValue q_kostant(const Coweight& lam);

    // dim V^lam(mu) via the alternating-sum formula over the Weyl group
    Int weight_multiplicity(const Coweight& lam, const Coweight& mu);
    // independent recursion on weight strings (used as the test oracle)
    Int freudenthal_multiplicity(const Coweight& lam, const Coweight& mu);

    WeightMultiset character(const Coweight& lam);
    Rat weyl_dimension(const Coweight& lam);

    // decomposition of a W-invariant multiset into irreducible characters
    std::map<Coweight, Int> peel(WeightMultiset ms);
    Int tensor_multiplicity(const Coweight& lam, const Coweight& lam1, const Coweight& lam2);
    std::map<Coweight, Int> tensor_decomposition(const Coweight& lam1, const Coweight& lam2);

    // nu -> dim Hom_M(U^nu, V^lam) over M-dominant nu, for the Levi given
    // by the vertex subset
    std::map<Coweight, Int> branch_to_levi(const std::vector<int>& subset, const Coweight& lam);

  private:
    Int kostant_rec(const Coweight& v, int k);
    void require_dominant(const Coweight& lam) const;
    void require_height(const Coweight& lam) const;

    BasedRootDatum d_;
    std::mutex mu_;
    std::map<std::pair<Coweight, int>, Int> kostant_memo_;
    std::map<std::pair<Coweight, int>, std::map<long, Int>> qkostant_memo_;
};

// weights mu of V^lam enumerated as lam - (nonneg span), dominant ones only
std::vector<Coweight> dominant_weights_below(const BasedRootDatum& d, const Coweight& lam);

}  // namespace eiscalc
