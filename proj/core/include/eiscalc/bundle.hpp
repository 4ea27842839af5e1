#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "eiscalc/gf.hpp"
#include "eiscalc/scalar.hpp"

namespace eiscalc {

struct count_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/*
  Isomorphism class of a vector bundle on the projective line: the
  weakly decreasing vector of splitting degrees.
*/
struct SplitBundle {
    std::vector<long> deg;

    SplitBundle() = default;
    explicit SplitBundle(std::vector<long> d);
    static SplitBundle line(long d) { return SplitBundle({d}); }

    int rank() const { return (int)deg.size(); }
    long degree() const;
    long spread() const { return deg.empty() ? 0 : deg.front() - deg.back(); }

    bool operator==(const SplitBundle& o) const { return deg == o.deg; }
    bool operator<(const SplitBundle& o) const { return deg < o.deg; }
    std::string str() const;
};

// dim Hom(O(d), O(e)) = max(0, e - d + 1)
long hom_dim(long d, long e);

// one rational point on the line, either a chart value or infinity
struct RationalPoint {
    bool at_infinity = false;
    int chart_value = 0;
};

struct ModificationResult {
    std::map<SplitBundle, Int> entries;
    Int total() const;
};

std::vector<SplitBundle> enumerate_split(int n, long degree, long spread);

// gaussian binomial [n choose k]_q
Int gaussian_binomial(int n, int k, long q);

/*
  Exact counting over a fixed base field size q.  All divisions are
  checked; a non-integral intermediate quotient aborts, because it means
  the counting recursion itself is wrong.  Memo tables make repeated
  queries cheap; instances may be shared across threads.
*/
class BunCounter {
  public:
    explicit BunCounter(long q);
    long q() const { return q_; }

    Int hom_count(const SplitBundle& N, const SplitBundle& M) const;
    Int aut_order(const SplitBundle& M);
    // injective sheaf maps N -> M
    Int inj_count(const SplitBundle& N, const SplitBundle& M);
    // surjective sheaf maps N -> Q
    Int surj_count(const SplitBundle& N, const SplitBundle& Q);

    Int rank1_subsheaf_count(const SplitBundle& M, long d);
    Int line_subbundle_count(const SplitBundle& M, long d);

    // subsheaves of M isomorphic to N (such a subsheaf may be full rank)
    Int subsheaf_type_count(const SplitBundle& M, const SplitBundle& N);
    // saturated subsheaves of M isomorphic to N (rank(N) < rank(M))
    Int subbundle_type_count(const SplitBundle& M, const SplitBundle& N);
    // saturated subsheaves with prescribed quotient type Q
    Int kernel_count(const SplitBundle& M, const SplitBundle& Q);

    /*
      Chains M_1 c M_2 c ... c M_{n-1} c M with rank(M_i) = i and
      deg(M_i) = profile[i-1].  saturated=false counts arbitrary subsheaf
      chains; saturated=true counts chains of subbundles.
    */
    Int flag_profile_count(const SplitBundle& M, const std::vector<long>& profile,
                           bool saturated);

    // split types of ker(M -> (M|_x)/W) over all codim-k subspaces W of
    // the fiber at a degree-1 point x
    ModificationResult hecke_modifications(const SplitBundle& M, int k,
                                           const RationalPoint& x = {});

    // types N with some subsheaf of M of rank r and degree d
    std::vector<SplitBundle> subsheaf_types(const SplitBundle& M, int r, long d) const;
    // candidate quotient types of M of rank r and degree d (finite superset)
    std::vector<SplitBundle> quotient_types(const SplitBundle& M, int r, long d) const;

  private:
    Int inj_count_locked(const SplitBundle& N, const SplitBundle& M);
    Int surj_count_locked(const SplitBundle& N, const SplitBundle& Q);
    Int subsheaf_type_count_locked(const SplitBundle& M, const SplitBundle& N);
    Int subbundle_type_count_locked(const SplitBundle& M, const SplitBundle& N);
    Int aut_order_locked(const SplitBundle& M);
    Int q_pow(long e) const;

    long q_;
    GF gf_;
    std::mutex mu_;
    std::map<std::pair<SplitBundle, SplitBundle>, Int> inj_memo_, surj_memo_, sbc_memo_;
    std::map<SplitBundle, Int> aut_memo_;
    std::map<std::tuple<SplitBundle, std::vector<long>, bool>, Int> flag_memo_;
};

}  // namespace eiscalc
