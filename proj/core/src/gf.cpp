#include "eiscalc/gf.hpp"

#include <functional>

namespace eiscalc {

namespace {

// polynomial coefficient vectors mod p, little-endian
std::vector<int> to_digits(int x, int p, int e) {
    std::vector<int> d(e);
    for (int i = 0; i < e; ++i) {
        d[i] = x % p;
        x /= p;
    }
    return d;
}

int from_digits(const std::vector<int>& d, int p) {
    int x = 0;
    for (int i = (int)d.size() - 1; i >= 0; --i) x = x * p + d[i];
    return x;
}

}  // namespace

GF::GF(long q) : q_(q) {
    int p = 2;
    while (q % p != 0) ++p;
    long t = q;
    e_ = 0;
    while (t > 1) {
        if (t % p != 0) throw std::runtime_error("GF: q is not a prime power");
        t /= p;
        ++e_;
    }
    p_ = p;
    if (e_ > 3) throw std::runtime_error("GF: prime powers beyond p^3 not supported");

    // monic irreducible of degree e over F_p; for e <= 3 irreducible means
    // no roots in F_p
    std::vector<int> modulus(e_ + 1, 0);
    modulus[e_] = 1;
    if (e_ > 1) {
        bool found = false;
        int pe = 1;
        for (int i = 0; i < e_; ++i) pe *= p;
        for (int lo = 0; lo < pe && !found; ++lo) {
            auto cand = to_digits(lo, p, e_);
            cand.push_back(1);
            bool has_root = false;
            for (int x = 0; x < p && !has_root; ++x) {
                long v = 0, xp = 1;
                for (int i = 0; i <= e_; ++i) {
                    v = (v + cand[i] * xp) % p;
                    xp = (xp * x) % p;
                }
                if (v % p == 0) has_root = true;
            }
            if (!has_root) {
                modulus = cand;
                found = true;
            }
        }
        if (!found) throw std::runtime_error("GF: no irreducible polynomial found");
    }

    auto mul_poly = [&](int a, int b) {
        auto da = to_digits(a, p, e_), db = to_digits(b, p, e_);
        std::vector<int> prod(2 * e_ - 1, 0);
        for (int i = 0; i < e_; ++i)
            for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        // reduce modulo the chosen irreducible
        for (int d = 2 * e_ - 2; d >= e_; --d) {
            int c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (int i = 0; i < e_; ++i)
                prod[d - e_ + i] = ((prod[d - e_ + i] - c * modulus[i]) % p + p * p) % p;
        }
        prod.resize(e_);
        return from_digits(prod, p);
    };

    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        auto da = to_digits(a, p, e_);
        for (int i = 0; i < e_; ++i) da[i] = (p - da[i]) % p;
        neg_[a] = from_digits(da, p);
        for (int b = 0; b < q_; ++b) {
            auto s = to_digits(a, p, e_);
            auto db = to_digits(b, p, e_);
            for (int i = 0; i < e_; ++i) s[i] = (s[i] + db[i]) % p;
            add_[a * q_ + b] = from_digits(s, p);
            mul_[a * q_ + b] = mul_poly(a, b);
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul(a, b) == 1) inv_[a] = b;
}

int GF::inv(int a) const {
    if (a == 0) throw std::runtime_error("GF: inverse of zero");
    return inv_[a];
}

int GF::rank(std::vector<std::vector<int>> rows) const {
    if (rows.empty()) return 0;
    int n = (int)rows[0].size();
    int rank = 0;
    for (int col = 0; col < n && rank < (int)rows.size(); ++col) {
        int pr = -1;
        for (int r = rank; r < (int)rows.size(); ++r)
            if (rows[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(rows[rank], rows[pr]);
        int piv_inv = inv(rows[rank][col]);
        for (int c = 0; c < n; ++c) rows[rank][c] = mul(rows[rank][c], piv_inv);
        for (int r = 0; r < (int)rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            int f = rows[r][col];
            for (int c = 0; c < n; ++c)
                rows[r][c] = add(rows[r][c], mul(neg_[f], rows[rank][c]));
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<std::vector<int>>> GF::subspaces(int n, int m) const {
    std::vector<std::vector<std::vector<int>>> out;
    if (m < 0 || m > n) return out;
    if (m == 0) {
        out.push_back({});
        return out;
    }
    // reduced row echelon forms: choose pivot columns, fill free entries
    std::vector<int> pivots(m);
    std::function<void(int, int)> choose = [&](int idx, int from) {
        if (idx == m) {
            // free positions: row r, column c > pivots[r], c not a pivot
            std::vector<std::pair<int, int>> free_pos;
            for (int r = 0; r < m; ++r)
                for (int c = pivots[r] + 1; c < n; ++c) {
                    bool is_pivot = false;
                    for (int r2 = 0; r2 < m; ++r2)
                        if (pivots[r2] == c) is_pivot = true;
                    if (!is_pivot) free_pos.push_back({r, c});
                }
            long total = 1;
            for (size_t i = 0; i < free_pos.size(); ++i) total *= q_;
            for (long code = 0; code < total; ++code) {
                std::vector<std::vector<int>> basis(m, std::vector<int>(n, 0));
                for (int r = 0; r < m; ++r) basis[r][pivots[r]] = 1;
                long rem = code;
                for (auto& [r, c] : free_pos) {
                    basis[r][c] = (int)(rem % q_);
                    rem /= q_;
                }
                out.push_back(basis);
            }
            return;
        }
        for (int c = from; c <= n - (m - idx); ++c) {
            pivots[idx] = c;
            choose(idx + 1, c + 1);
        }
    };
    choose(0, 0);
    return out;
}

}  // namespace eiscalc
