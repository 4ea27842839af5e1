#pragma once

#include "eiscalc/cone_series.hpp"
#include "eiscalc/rootdata.hpp"
#include "eiscalc/scalar.hpp"

namespace eiscalc {

/*
  The projective line over F_q: closed-point counts a_d per degree,
  satisfying  sum_{d | n} d a_d = q^n + 1  exactly.
*/
struct CurveContext {
    long q = 0;
    int genus = 0;
    std::vector<Int> point_counts;  // point_counts[d-1] = a_d

    static CurveContext p1(long q, int max_degree);
    Int a(int d) const { return point_counts.at(d - 1); }
    int max_degree() const { return (int)point_counts.size(); }
};

// number of effective divisors of degree n, i.e. (q^{n+1} - 1)/(q - 1)
Int effective_divisor_count(const CurveContext& ctx, long n);

/*
  Trace of Frobenius on the n-th symmetric power of the rank-1 system
  whose value on the degree-1 Picard class is s: the weighted count
  sum_{deg D = n} s^{deg D} = s^n * #X^(n)(F_q).
*/
Scalar sym_power_trace(const CurveContext& ctx, const Scalar& s, long n);

/*
  Abelian L-series along the ray of the positive coroot alpha:
  coefficient q^{-n} * sym_power_trace(s, n) at n*alpha.  s is the value
  of the relevant rank-1 character on the degree-1 Picard class.
*/
ConeSeries l_series(const CurveContext& ctx, const BasedRootDatum& d, const Scalar& s,
                    const Coweight& alpha, long height_bound);

/*
  An r-tuple of nonzero scalars, the Frobenius data of a torus character.
  Values multiply as s^mu across the coweight lattice.
*/
struct UnramifiedCharacter {
    std::vector<Scalar> values;

    long q() const { return values.empty() ? 0 : values[0].q(); }
    int rank() const { return (int)values.size(); }
    // s^mu = prod s_i^{mu_i}
    Scalar value_at(const Coweight& mu) const;
    UnramifiedCharacter permuted(const WeylElement& w) const;
};

// every alpha-component nontrivial: prod s_i^{<alpha, e_i>} != 1
bool is_regular(const UnramifiedCharacter& chi, const BasedRootDatum& d);

struct curve_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace eiscalc
