#include "eiscalc/bundle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

namespace eiscalc {

SplitBundle::SplitBundle(std::vector<long> d) : deg(std::move(d)) {
    for (size_t i = 0; i + 1 < deg.size(); ++i)
        if (deg[i] < deg[i + 1]) throw count_error("split type must be weakly decreasing");
}

long SplitBundle::degree() const {
    long s = 0;
    for (long a : deg) s += a;
    return s;
}

std::string SplitBundle::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < deg.size(); ++i) {
        if (i) os << ",";
        os << deg[i];
    }
    return os.str();
}

long hom_dim(long d, long e) { return std::max(0L, e - d + 1); }

Int ModificationResult::total() const {
    Int t = 0;
    for (auto& [m, c] : entries) t += c;
    return t;
}

std::vector<SplitBundle> enumerate_split(int n, long degree, long spread) {
    if (spread < 0) throw count_error("enumerate_split: negative spread");
    std::vector<SplitBundle> out;
    if (n <= 0) return out;
    std::vector<long> cur(n);
    // fill positions left to right, weakly decreasing, bottom >= a_1 - spread
    std::function<void(int, long)> rec = [&](int i, long remaining) {
        long lo = cur[0] - spread;
        if (i == n - 1) {
            if (remaining <= cur[i - 1] && remaining >= lo) {
                cur[i] = remaining;
                out.push_back(SplitBundle(cur));
            }
            return;
        }
        long slots = n - 1 - i;
        for (long a = std::min(cur[i - 1], remaining - slots * lo); a >= lo; --a) {
            if (remaining - a > slots * a) break;  // rest cannot stay <= a
            cur[i] = a;
            rec(i + 1, remaining - a);
        }
    };
    if (n == 1) {
        out.push_back(SplitBundle({degree}));
        return out;
    }
    long a1_lo = degree >= 0 ? (degree + n - 1) / n : degree / n;  // ceil(degree/n)
    while (n * (a1_lo - 1) >= degree) --a1_lo;                     // guard rounding
    for (long a1 = a1_lo;; ++a1) {
        if (a1 + (n - 1) * (a1 - spread) > degree) break;
        if (n * a1 < degree) continue;
        cur[0] = a1;
        rec(1, degree - a1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int gaussian_binomial(int n, int k, long q) {
    if (k < 0 || k > n) return 0;
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        Int qn = 1, qk = 1;
        for (int j = 0; j < n - i; ++j) qn *= q;
        for (int j = 0; j < k - i; ++j) qk *= q;
        num *= qn - 1;
        den *= qk - 1;
    }
    if (num % den != 0) throw count_error("gaussian binomial: division failed");
    return num / den;
}

namespace {

// sum of the j largest entries (degrees are stored descending)
long top_sum(const SplitBundle& B, int j) {
    long s = 0;
    for (int i = 0; i < j; ++i) s += B.deg[i];
    return s;
}

// sum of the j smallest entries
long bottom_sum(const SplitBundle& B, int j) {
    long s = 0;
    for (int i = 0; i < j; ++i) s += B.deg[B.rank() - 1 - i];
    return s;
}

/*
  Candidate types for a quotient bundle of N of rank r and degree dq.
  Dualizing a surjection gives an injection of the dual, so the bottom
  partial sums of the quotient dominate those of N.  This is a finite
  superset of the actual quotient types; exact counts sieve the rest.
*/
std::vector<SplitBundle> quotient_type_candidates(const SplitBundle& N, int r, long dq) {
    std::vector<SplitBundle> out;
    if (r == 0) {
        if (dq == 0) out.push_back(SplitBundle{});
        return out;
    }
    // build ascending from the bottom entry: q_r <= q_{r-1} <= ... and
    // for each k, the bottom-k sum is at least bottom_sum(N, k)
    std::vector<long> asc(r);
    std::function<void(int, long)> rec = [&](int k, long used) {
        // k entries placed (bottom k), summing to 'used'
        if (k == r) {
            if (used != dq) return;
            std::vector<long> desc(asc.rbegin(), asc.rend());
            out.push_back(SplitBundle(desc));
            return;
        }
        long prev = k == 0 ? std::numeric_limits<long>::min() : asc[k - 1];
        long lo = std::max(prev, bottom_sum(N, k + 1) - used);
        // remaining r-k entries all >= candidate, so candidate <= mean of rest
        for (long a = lo;; ++a) {
            if (a * (r - k) > dq - used) break;
            asc[k] = a;
            rec(k + 1, used + a);
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace

BunCounter::BunCounter(long q) : q_(q), gf_(q) {
    if (!is_prime_power(q)) throw count_error("BunCounter: q must be a prime power");
}

std::vector<SplitBundle> BunCounter::quotient_types(const SplitBundle& M, int r, long d) const {
    return quotient_type_candidates(M, r, d);
}

Int BunCounter::q_pow(long e) const {
    Int r = 1;
    for (long i = 0; i < e; ++i) r *= q_;
    return r;
}

Int BunCounter::hom_count(const SplitBundle& N, const SplitBundle& M) const {
    long dim = 0;
    for (long d : N.deg)
        for (long e : M.deg) dim += hom_dim(d, e);
    return q_pow(dim);
}

Int BunCounter::aut_order(const SplitBundle& M) {
    std::lock_guard<std::mutex> lock(mu_);
    return aut_order_locked(M);
}

Int BunCounter::aut_order_locked(const SplitBundle& M) {
    auto it = aut_memo_.find(M);
    if (it != aut_memo_.end()) return it->second;
    // GL of each equal-degree block times the Hom part between degrees
    Int order = 1;
    size_t i = 0;
    while (i < M.deg.size()) {
        size_t j = i;
        while (j < M.deg.size() && M.deg[j] == M.deg[i]) ++j;
        long m = (long)(j - i);
        Int qm = q_pow(m);
        for (long t = 0; t < m; ++t) order *= qm - q_pow(t);
        i = j;
    }
    long updim = 0;
    for (size_t a = 0; a < M.deg.size(); ++a)
        for (size_t b = 0; b < M.deg.size(); ++b)
            if (M.deg[a] > M.deg[b]) updim += M.deg[a] - M.deg[b] + 1;
    order *= q_pow(updim);
    return aut_memo_[M] = order;
}

std::vector<SplitBundle> BunCounter::subsheaf_types(const SplitBundle& M, int r, long d) const {
    // partial degree sums of a subsheaf are bounded by those of M
    std::vector<SplitBundle> out;
    if (r < 0 || r > M.rank()) return out;
    if (r == 0) {
        if (d == 0) out.push_back(SplitBundle{});
        return out;
    }
    std::vector<long> cur(r);
    std::function<void(int, long)> rec = [&](int i, long sum) {
        if (i == r) {
            if (sum == d) out.push_back(SplitBundle(cur));
            return;
        }
        long hi = std::min(i == 0 ? top_sum(M, 1) : cur[i - 1], top_sum(M, i + 1) - sum);
        long slots = r - i;
        for (long a = hi;; --a) {
            // all remaining entries are <= a, so a*slots >= d - sum is needed
            if (a * slots < d - sum) break;
            cur[i] = a;
            rec(i + 1, sum + a);
        }
    };
    rec(0, 0);
    return out;
}

Int BunCounter::inj_count(const SplitBundle& N, const SplitBundle& M) {
    std::lock_guard<std::mutex> lock(mu_);
    return inj_count_locked(N, M);
}

/*
  Injections via kernels.  A nonzero map into a torsion-free sheaf has a
  saturated kernel, so maps N -> M split by the quotient type Q:

    #Hom(N, M) = sum_Q #{saturated K c N : N/K = Q} * #Inj(Q, M),

  the Q = N term being the injections.  Kernel positions are counted by
  surjections modulo Aut(Q).
*/
Int BunCounter::inj_count_locked(const SplitBundle& N, const SplitBundle& M) {
    if (N.rank() > M.rank()) return 0;
    if (N.rank() == 0) return 1;
    auto key = std::make_pair(N, M);
    auto it = inj_memo_.find(key);
    if (it != inj_memo_.end()) return it->second;
    Int total = hom_count(N, M);
    for (int r = 0; r < N.rank(); ++r) {
        // deg Q >= bottom_r(N) (duality), and Q must fit into M
        long lo = bottom_sum(N, r);
        long hi = top_sum(M, r);
        for (long dq = lo; dq <= hi; ++dq) {
            for (auto& Q : quotient_type_candidates(N, r, dq)) {
                Int ns = surj_count_locked(N, Q);
                if (ns == 0) continue;
                Int autq = aut_order_locked(Q);
                if (ns % autq != 0) throw count_error("inj_count: kernel count not integral");
                Int injq = inj_count_locked(Q, M);
                if (injq == 0) continue;
                total -= (ns / autq) * injq;
            }
            if (r == 0) break;  // only the zero quotient at rank 0
        }
    }
    if (total < 0) throw count_error("inj_count: negative count");
    return inj_memo_[key] = total;
}

Int BunCounter::surj_count(const SplitBundle& N, const SplitBundle& Q) {
    std::lock_guard<std::mutex> lock(mu_);
    return surj_count_locked(N, Q);
}

/*
  Surjections by sieving over the image:
    #Hom(N, Q) = sum over subsheaf types T of Q  #{T c Q} * #Surj(N, T).
*/
Int BunCounter::surj_count_locked(const SplitBundle& N, const SplitBundle& Q) {
    if (Q.rank() == 0) return 1;
    if (Q.rank() > N.rank()) return 0;
    auto key = std::make_pair(N, Q);
    auto it = surj_memo_.find(key);
    if (it != surj_memo_.end()) return it->second;
    Int total = hom_count(N, Q);
    for (int r = 0; r <= Q.rank(); ++r) {
        // images are quotients of N: degree at least bottom_r(N)
        long lo = bottom_sum(N, r);
        long hi = top_sum(Q, r);
        for (long dt = lo; dt <= hi; ++dt) {
            for (auto& T : subsheaf_types(Q, r, dt)) {
                if (T == Q) continue;
                Int cnt = subsheaf_type_count_locked(Q, T);
                if (cnt == 0) continue;
                Int s = surj_count_locked(N, T);
                if (s == 0) continue;
                total -= cnt * s;
            }
            if (r == 0) break;
        }
    }
    if (total < 0) throw count_error("surj_count: negative count");
    return surj_memo_[key] = total;
}

Int BunCounter::rank1_subsheaf_count(const SplitBundle& M, long d) {
    Int nonzero = hom_count(SplitBundle::line(d), M) - 1;
    if (nonzero % (q_ - 1) != 0) throw count_error("rank1 subsheaf count not integral");
    return nonzero / (q_ - 1);
}

Int BunCounter::line_subbundle_count(const SplitBundle& M, long d) {
    if (M.rank() < 1) return 0;
    long dmax = M.deg[0];
    if (d > dmax) return 0;
    // invert subsheaf(e) = sum_m subbundle(e+m) * #X^(m) from the top down
    std::vector<Int> sb(dmax - d + 1, 0);
    for (long e = dmax; e >= d; --e) {
        Int acc = rank1_subsheaf_count(M, e);
        for (long m = 1; e + m <= dmax; ++m) {
            Int em = (q_pow(m + 1) - 1) / (q_ - 1);
            acc -= sb[dmax - (e + m)] * em;
        }
        if (acc < 0) throw count_error("line_subbundle_count: negative count");
        sb[dmax - e] = acc;
    }
    return sb[dmax - d];
}

Int BunCounter::subsheaf_type_count(const SplitBundle& M, const SplitBundle& N) {
    std::lock_guard<std::mutex> lock(mu_);
    return subsheaf_type_count_locked(M, N);
}

Int BunCounter::subsheaf_type_count_locked(const SplitBundle& M, const SplitBundle& N) {
    Int inj = inj_count_locked(N, M);
    if (inj == 0) return 0;
    Int aut = aut_order_locked(N);
    if (inj % aut != 0) throw count_error("subsheaf_type_count: non-integral division");
    return inj / aut;
}

Int BunCounter::subbundle_type_count(const SplitBundle& M, const SplitBundle& N) {
    std::lock_guard<std::mutex> lock(mu_);
    return subbundle_type_count_locked(M, N);
}

/*
  Saturation inversion in type space: each subsheaf of type N lies in a
  unique saturated subsheaf, of a type N' of the same rank and higher or
  equal degree, as a full-rank subsheaf.  Solve top-down in the degree.
*/
Int BunCounter::subbundle_type_count_locked(const SplitBundle& M, const SplitBundle& N) {
    if (N.rank() >= M.rank()) throw count_error("subbundle_type_count: rank must drop");
    auto key = std::make_pair(M, N);
    auto it = sbc_memo_.find(key);
    if (it != sbc_memo_.end()) return it->second;
    Int total = subsheaf_type_count_locked(M, N);
    long hi = top_sum(M, N.rank());
    for (long d2 = N.degree() + 1; d2 <= hi; ++d2) {
        for (auto& N2 : subsheaf_types(M, N.rank(), d2)) {
            Int sb = subbundle_type_count_locked(M, N2);
            if (sb == 0) continue;
            Int full = subsheaf_type_count_locked(N2, N);
            if (full == 0) continue;
            total -= sb * full;
        }
    }
    if (total < 0) throw count_error("subbundle_type_count: negative count");
    return sbc_memo_[key] = total;
}

Int BunCounter::kernel_count(const SplitBundle& M, const SplitBundle& Q) {
    std::lock_guard<std::mutex> lock(mu_);
    Int s = surj_count_locked(M, Q);
    if (s == 0) return 0;
    Int autq = aut_order_locked(Q);
    if (s % autq != 0) throw count_error("kernel_count: non-integral division");
    return s / autq;
}

Int BunCounter::flag_profile_count(const SplitBundle& M, const std::vector<long>& profile,
                                   bool saturated) {
    if ((int)profile.size() != M.rank() - 1)
        throw count_error("flag_profile_count: profile length must be rank-1");
    if (M.rank() <= 1) return 1;
    auto key = std::make_tuple(M, profile, saturated);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = flag_memo_.find(key);
        if (it != flag_memo_.end()) return it->second;
    }
    int r = M.rank() - 1;
    long dtop = profile.back();
    std::vector<long> lower(profile.begin(), profile.end() - 1);
    Int total = 0;
    for (auto& T : subsheaf_types(M, r, dtop)) {
        Int cnt = saturated ? subbundle_type_count(M, T) : subsheaf_type_count(M, T);
        if (cnt == 0) continue;
        total += cnt * flag_profile_count(T, lower, saturated);
    }
    std::lock_guard<std::mutex> lock(mu_);
    return flag_memo_[key] = total;
}

ModificationResult BunCounter::hecke_modifications(const SplitBundle& M, int k,
                                                   const RationalPoint& x) {
    (void)x;  // the resulting split type is the same at every degree-1
              // point; sections are evaluated on the standard chart
    int n = M.rank();
    if (k < 1 || k > n) throw count_error("hecke_modifications: k out of range");
    ModificationResult res;
    long lo = M.deg.back(), hi = M.deg.front();
    long mA = -hi - 2, mB = -lo + 1;
    for (auto& W : gf_.subspaces(n, n - k)) {
        // h^0 of ker(M -> fiber/W) twisted by m: sections of M(m) whose
        // value at x lies in W
        std::vector<long> h0;
        for (long m = mA; m <= mB; ++m) {
            long h0M = 0;
            std::vector<std::vector<int>> rows = W;
            for (int i = 0; i < n; ++i) {
                h0M += std::max(0L, M.deg[i] + m + 1);
                if (M.deg[i] + m >= 0) {
                    std::vector<int> e(n, 0);
                    e[i] = 1;
                    rows.push_back(e);
                }
            }
            int dim_sum = rows.empty() ? 0 : gf_.rank(rows);
            h0.push_back(h0M - (dim_sum - (int)W.size()));
        }
        // delta(m) = h0(m) - h0(m-1) counts summands with b_i >= -m
        auto delta = [&](long m) { return h0[m - mA] - h0[m - mA - 1]; };
        std::vector<long> newdeg;
        for (long v = hi; v >= lo - 1; --v) {
            long cnt = delta(-v) - delta(-v - 1);
            if (cnt < 0) throw count_error("hecke: type reconstruction failed");
            for (long t = 0; t < cnt; ++t) newdeg.push_back(v);
        }
        if ((int)newdeg.size() != n) throw count_error("hecke: type reconstruction failed");
        SplitBundle type(newdeg);
        if (type.degree() != M.degree() - k) throw count_error("hecke: degree drop mismatch");
        res.entries[type] += 1;
    }
    if (res.total() != gaussian_binomial(n, n - k, q_))
        throw count_error("hecke: modification total mismatch");
    return res;
}

}  // namespace eiscalc
