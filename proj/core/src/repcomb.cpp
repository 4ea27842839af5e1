#include "eiscalc/repcomb.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace eiscalc {

namespace {
constexpr long kHeightCap = 64;
}

Scalar QKostantValue::eval(const Scalar& x) const {
    Scalar acc = Scalar::zero(x.q());
    for (auto& [m, c] : coeffs) acc += Scalar::rational(Rat(c), x.q()) * x.pow(m);
    return acc;
}

void RepCalc::require_dominant(const Coweight& lam) const {
    if (!d_.is_dominant(lam)) throw rootdata_error("coweight must be dominant: " + vec_str(lam));
}

void RepCalc::require_height(const Coweight& lam) const {
    auto c = d_.positive_coefficients(lam);
    if (c && d_.height2(lam) > kHeightCap)
        throw rootdata_error("partition enumeration height cap exceeded");
}

Int RepCalc::kostant_count(const Coweight& lam) {
    if ((int)lam.size() != d_.rank()) throw rootdata_error("kostant_count: rank mismatch");
    require_height(lam);
    std::lock_guard<std::mutex> lock(mu_);
    return kostant_rec(lam, (int)d_.positive_coroots().size());
}

// decompositions of v using only the first k positive coroots
Int RepCalc::kostant_rec(const Coweight& v, int k) {
    bool zero = std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
    if (zero) return 1;
    if (k == 0) return 0;
    if (!d_.positive_coefficients(v)) return 0;
    auto key = std::make_pair(v, k);
    auto it = kostant_memo_.find(key);
    if (it != kostant_memo_.end()) return it->second;
    const Coweight& alpha = d_.positive_coroots()[k - 1];
    Int total = 0;
    Coweight w = v;
    while (true) {
        total += kostant_rec(w, k - 1);
        w = vsub(w, alpha);
        if (!d_.positive_coefficients(w)) break;
    }
    kostant_memo_[key] = total;
    return total;
}

QKostantValue RepCalc::q_kostant(const Coweight& lam) {
    if ((int)lam.size() != d_.rank()) throw rootdata_error("q_kostant: rank mismatch");
    require_height(lam);
    std::lock_guard<std::mutex> lock(mu_);
    // graded variant of the same recursion
    std::function<std::map<long, Int>(const Coweight&, int)> rec =
        [&](const Coweight& v, int k) -> std::map<long, Int> {
        bool zero = std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
        if (zero) return {{0, 1}};
        if (k == 0 || !d_.positive_coefficients(v)) return {};
        auto key = std::make_pair(v, k);
        auto it = qkostant_memo_.find(key);
        if (it != qkostant_memo_.end()) return it->second;
        const Coweight& alpha = d_.positive_coroots()[k - 1];
        std::map<long, Int> total;
        Coweight w = v;
        long m = 0;
        while (true) {
            for (auto& [g, c] : rec(w, k - 1)) total[g + m] += c;
            w = vsub(w, alpha);
            ++m;
            if (!d_.positive_coefficients(w)) break;
        }
        qkostant_memo_[key] = total;
        return total;
    };
    QKostantValue out;
    out.coeffs = rec(lam, (int)d_.positive_coroots().size());
    return out;
}

Int RepCalc::weight_multiplicity(const Coweight& lam, const Coweight& mu) {
    require_dominant(lam);
    if (lam.size() != mu.size()) throw rootdata_error("weight_multiplicity: rank mismatch");
    // sum over W of sign(w) * P(w(lam + rho) - (mu + rho)); the rho shifts
    // are half-integral but their difference along the orbit is integral
    Int total = 0;
    Coweight lam2 = vscale(2, lam);
    Coweight mu2 = vscale(2, mu);
    Coweight two_rho(d_.rank(), 0);
    for (auto& a : d_.positive_coroots()) two_rho = vadd(two_rho, a);
    for (auto& w : d_.weyl_group()) {
        Coweight arg2 = vsub(w.apply(vadd(lam2, two_rho)), vadd(mu2, two_rho));
        Coweight arg(d_.rank());
        bool ok = true;
        for (int i = 0; i < d_.rank(); ++i) {
            if (arg2[i] % 2 != 0) {
                ok = false;
                break;
            }
            arg[i] = arg2[i] / 2;
        }
        if (!ok) throw rootdata_error("weight_multiplicity: non-integral Kostant argument");
        if (!d_.positive_coefficients(arg)) continue;
        Int p = kostant_count(arg);
        total += w.sign() > 0 ? p : -p;
    }
    if (total < 0) throw rootdata_error("weight_multiplicity: negative value, broken datum");
    return total;
}

std::vector<Coweight> dominant_weights_below(const BasedRootDatum& d, const Coweight& lam) {
    // candidates lam - nu with nu in the positive cone below lam - w0(lam)
    Coweight span = vsub(lam, d.w0().apply(lam));
    auto top = d.positive_coefficients(span);
    if (!top) throw rootdata_error("dominant_weights_below: lam - w0(lam) not positive");
    std::vector<Coweight> out;
    int m = d.num_simple();
    std::vector<long> c(m, 0);
    std::function<void(int)> walk = [&](int k) {
        if (k == m) {
            Coweight nu(d.rank(), 0);
            for (int i = 0; i < m; ++i) nu = vadd(nu, vscale(c[i], d.simple_coroots()[i]));
            Coweight mu = vsub(lam, nu);
            if (d.is_dominant(mu)) out.push_back(mu);
            return;
        }
        for (c[k] = 0; c[k] <= (*top)[k]; ++c[k]) walk(k + 1);
        c[k] = 0;
    };
    walk(0);
    return out;
}

WeightMultiset RepCalc::character(const Coweight& lam) {
    require_dominant(lam);
    WeightMultiset ms;
    for (auto& mu : dominant_weights_below(d_, lam)) {
        Int m = weight_multiplicity(lam, mu);
        if (m == 0) continue;
        // spread over the W-orbit
        std::set<Coweight> orbit;
        for (auto& w : d_.weyl_group()) orbit.insert(w.apply(mu));
        for (auto& v : orbit) ms[v] = m;
    }
    return ms;
}

Rat RepCalc::weyl_dimension(const Coweight& lam) {
    require_dominant(lam);
    Rat num = 1, den = 1;
    const auto& rho = d_.rho();
    for (size_t k = 0; k < d_.positive_coroots().size(); ++k) {
        const Weight& rt = d_.positive_roots()[k];
        Rat a = 0, b = 0;
        for (int i = 0; i < d_.rank(); ++i) {
            a += (Rat(lam[i]) + rho[i]) * rt[i];
            b += rho[i] * rt[i];
        }
        num *= a;
        den *= b;
    }
    return num / den;
}

std::map<Coweight, Int> RepCalc::peel(WeightMultiset ms) {
    std::map<Coweight, Int> out;
    while (!ms.empty()) {
        // dominance-maximal dominant weight, lex-greatest among ties
        Coweight best;
        bool have = false;
        for (auto& [mu, c] : ms) {
            if (c == 0 || !d_.is_dominant(mu)) continue;
            bool maximal = true;
            for (auto& [nu, c2] : ms) {
                if (c2 == 0 || nu == mu) continue;
                if (d_.dominance_leq(mu, nu)) {
                    maximal = false;
                    break;
                }
            }
            if (!maximal) continue;
            if (!have || std::lexicographical_compare(best.begin(), best.end(), mu.begin(),
                                                      mu.end())) {
                best = mu;
                have = true;
            }
        }
        if (!have) {
            // clean out exact zeros; anything else means a non-character input
            bool all_zero = std::all_of(ms.begin(), ms.end(),
                                        [](const auto& p) { return p.second == 0; });
            if (all_zero) break;
            throw rootdata_error("peel: multiset is not a nonnegative sum of characters");
        }
        Int mult = ms[best];
        if (mult < 0) throw rootdata_error("peel: negative leading multiplicity");
        out[best] = mult;
        for (auto& [mu, c] : character(best)) {
            ms[mu] -= mult * c;
            if (ms[mu] == 0) ms.erase(mu);
        }
    }
    return out;
}

std::map<Coweight, Int> RepCalc::tensor_decomposition(const Coweight& lam1, const Coweight& lam2) {
    WeightMultiset c1 = character(lam1), c2 = character(lam2), prod;
    for (auto& [m1, a] : c1)
        for (auto& [m2, b] : c2) prod[vadd(m1, m2)] += a * b;
    return peel(std::move(prod));
}

Int RepCalc::tensor_multiplicity(const Coweight& lam, const Coweight& lam1, const Coweight& lam2) {
    require_dominant(lam);
    auto dec = tensor_decomposition(lam1, lam2);
    auto it = dec.find(lam);
    return it == dec.end() ? Int(0) : it->second;
}

std::map<Coweight, Int> RepCalc::branch_to_levi(const std::vector<int>& subset,
                                                const Coweight& lam) {
    BasedRootDatum levi = d_.levi(subset);
    RepCalc lc(levi);
    return lc.peel(character(lam));
}

Int RepCalc::freudenthal_multiplicity(const Coweight& lam, const Coweight& mu) {
    require_dominant(lam);
    // standard-inner-product recursion, walking down from the highest weight;
    // valid for the gl-type data this library exercises
    auto ip = [&](const RatVec& x, const RatVec& y) {
        Rat s = 0;
        for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
        return s;
    };
    auto to_rat = [&](const Coweight& v) {
        RatVec r(v.size());
        for (size_t i = 0; i < v.size(); ++i) r[i] = v[i];
        return r;
    };
    Coweight mu_dom = d_.dominant_representative(mu);
    if (!d_.dominance_leq(mu_dom, lam)) return 0;

    std::map<Coweight, Int> mult;
    std::function<Int(const Coweight&)> get = [&](const Coweight& nu) -> Int {
        Coweight nu_dom = d_.dominant_representative(nu);
        auto it = mult.find(nu_dom);
        if (it != mult.end()) return it->second;
        if (nu_dom == lam) return mult[nu_dom] = 1;
        if (!d_.dominance_leq(nu_dom, lam)) return mult[nu_dom] = 0;
        const auto& rho = d_.rho();
        RatVec lr = to_rat(lam), nr = to_rat(nu_dom);
        for (int i = 0; i < d_.rank(); ++i) {
            lr[i] += rho[i];
            nr[i] += rho[i];
        }
        Rat denom = ip(lr, lr) - ip(nr, nr);
        if (denom == 0) return mult[nu_dom] = 0;
        Rat acc = 0;
        for (auto& alpha : d_.positive_coroots()) {
            // heights are bounded by ht(lam), so the string is finite
            long kmax = (d_.height2(lam) - d_.height2(nu_dom)) / d_.height2(alpha) + 1;
            Coweight step = nu_dom;
            for (long k = 1; k <= kmax; ++k) {
                step = vadd(step, alpha);
                Coweight step_dom = d_.dominant_representative(step);
                if (!d_.dominance_leq(step_dom, lam)) continue;
                Int m = get(step);
                if (m != 0) {
                    RatVec sr = to_rat(step);
                    RatVec ar = to_rat(alpha);
                    acc += Rat(m) * 2 * ip(sr, ar);
                }
            }
        }
        Rat value = acc / denom;
        if (value.get_den() != 1 || value < 0)
            throw rootdata_error("freudenthal: non-integral multiplicity");
        return mult[nu_dom] = Int(value.get_num());
    };
    return get(mu);
}

}  // namespace eiscalc
