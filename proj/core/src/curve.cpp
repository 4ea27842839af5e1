#include "eiscalc/curve.hpp"

namespace eiscalc {

CurveContext CurveContext::p1(long q, int max_degree) {
    if (!is_prime_power(q)) throw curve_error("q must be a prime power");
    if (max_degree < 1) throw curve_error("need at least degree 1");
    CurveContext ctx;
    ctx.q = q;
    ctx.point_counts.resize(max_degree);
    for (int n = 1; n <= max_degree; ++n) {
        Int qn = 1;
        for (int i = 0; i < n; ++i) qn *= q;
        Int rest = qn + 1;
        for (int d = 1; d < n; ++d)
            if (n % d == 0) rest -= Int(d) * ctx.point_counts[d - 1];
        if (rest % n != 0) throw curve_error("zeta identity failed to invert");
        ctx.point_counts[n - 1] = rest / n;
    }
    return ctx;
}

Int effective_divisor_count(const CurveContext& ctx, long n) {
    if (n < 0) return 0;
    Int qn1 = 1;
    for (long i = 0; i <= n; ++i) qn1 *= ctx.q;
    return (qn1 - 1) / (ctx.q - 1);
}

Scalar sym_power_trace(const CurveContext& ctx, const Scalar& s, long n) {
    if (s.is_zero()) throw curve_error("character value must be nonzero");
    if (n < 0) throw curve_error("negative symmetric power");
    return s.pow(n) * Scalar::rational(Rat(effective_divisor_count(ctx, n)), ctx.q);
}

ConeSeries l_series(const CurveContext& ctx, const BasedRootDatum& d, const Scalar& s,
                    const Coweight& alpha, long height_bound) {
    bool positive = false;
    for (auto& a : d.positive_coroots())
        if (a == alpha) positive = true;
    if (!positive) throw curve_error("l_series: alpha is not a positive coroot");
    Coweight zero(d.rank(), 0);
    ConeSeries out(d, ctx.q, zero, height_bound);
    long step = d.height2(alpha);
    Scalar qinv = Scalar::rational(Rat(1, ctx.q), ctx.q);
    for (long n = 0; n * step <= height_bound; ++n)
        out.set(vscale(n, alpha), qinv.pow(n) * sym_power_trace(ctx, s, n));
    return out;
}

Scalar UnramifiedCharacter::value_at(const Coweight& mu) const {
    if (mu.size() != values.size()) throw curve_error("character: rank mismatch");
    Scalar acc = Scalar::one(q());
    for (size_t i = 0; i < values.size(); ++i) acc *= values[i].pow(mu[i]);
    return acc;
}

UnramifiedCharacter UnramifiedCharacter::permuted(const WeylElement& w) const {
    // (chi^w)^mu = chi^{w^{-1}(mu)}, so the new i-th value is chi at the
    // i-th column of the inverse matrix.  Weyl matrices are unimodular;
    // invert by rational elimination.
    int n = (int)values.size();
    std::vector<std::vector<Rat>> A(n, std::vector<Rat>(2 * n));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) A[r][c] = w.matrix[c][r];
        A[r][n + r] = 1;
    }
    for (int col = 0, row = 0; col < n && row < n; ++col) {
        int pr = -1;
        for (int r = row; r < n; ++r)
            if (A[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) throw curve_error("permuted: singular Weyl matrix");
        std::swap(A[row], A[pr]);
        Rat p = A[row][col];
        for (int c = 0; c < 2 * n; ++c) A[row][c] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == row || A[r][col] == 0) continue;
            Rat f = A[r][col];
            for (int c = 0; c < 2 * n; ++c) A[r][c] -= f * A[row][c];
        }
        ++row;
    }
    UnramifiedCharacter out;
    out.values.resize(n);
    for (int i = 0; i < n; ++i) {
        Coweight x(n);
        for (int r = 0; r < n; ++r) {
            if (A[r][n + i].get_den() != 1) throw curve_error("permuted: non-integral inverse");
            x[r] = static_cast<long>(A[r][n + i].get_num().get_si());
        }
        out.values[i] = value_at(x);
    }
    return out;
}

bool is_regular(const UnramifiedCharacter& chi, const BasedRootDatum& d) {
    if (chi.rank() != d.rank()) throw curve_error("is_regular: rank mismatch");
    for (auto& s : chi.values)
        if (s.is_zero()) throw curve_error("is_regular: zero character value");
    Scalar one = Scalar::one(chi.q());
    for (auto& alpha : d.positive_coroots())
        if (chi.value_at(alpha) == one) return false;
    return true;
}

}  // namespace eiscalc
