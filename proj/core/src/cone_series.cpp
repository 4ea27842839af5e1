#include "eiscalc/cone_series.hpp"

#include <algorithm>
#include <sstream>

namespace eiscalc {

ConeSeries::ConeSeries(const BasedRootDatum& datum, long q, Coweight base, long height_bound)
    : datum_(&datum), q_(q), base_(std::move(base)), height_bound_(height_bound) {
    if ((int)base_.size() != datum.rank()) throw series_error("base of wrong rank");
    if (height_bound_ < 0) throw series_error("negative height bound");
}

ConeSeries ConeSeries::unit(const BasedRootDatum& datum, long q, long height_bound) {
    Coweight zero(datum.rank(), 0);
    ConeSeries s(datum, q, zero, height_bound);
    s.set(zero, Scalar::one(q));
    return s;
}

ConeSeries ConeSeries::monomial(const BasedRootDatum& datum, long q, const Coweight& mu,
                                const Scalar& c, long height_bound) {
    ConeSeries s(datum, q, mu, height_bound);
    s.set(mu, c);
    return s;
}

void ConeSeries::set(const Coweight& mu, const Scalar& c) {
    if (!datum_->dominance_leq(base_, mu)) throw series_error("key below the base of the cone");
    if (height_of(mu) > height_bound_) return;
    if (c.is_zero())
        coeffs_.erase(mu);
    else
        coeffs_[mu] = c;
}

void ConeSeries::add_to(const Coweight& mu, const Scalar& c) {
    auto it = coeffs_.find(mu);
    if (it == coeffs_.end()) {
        set(mu, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
}

Scalar ConeSeries::at(const Coweight& mu) const {
    auto it = coeffs_.find(mu);
    return it == coeffs_.end() ? Scalar::zero(q_) : it->second;
}

ConeSeries ConeSeries::truncated(long new_bound) const {
    ConeSeries s(*datum_, q_, base_, std::min(new_bound, height_bound_));
    for (auto& [mu, c] : coeffs_)
        if (height_of(mu) <= s.height_bound_) s.coeffs_[mu] = c;
    return s;
}

ConeSeries ConeSeries::rebased(const Coweight& b) const {
    if (!datum_->dominance_leq(b, base_)) throw series_error("rebase target not below base");
    ConeSeries s(*datum_, q_, b, height_bound_);
    for (auto& [mu, c] : coeffs_)
        if (s.height_of(mu) <= height_bound_) s.coeffs_[mu] = c;
    return s;
}

Coweight ConeSeries::meet(const BasedRootDatum& d, const Coweight& a, const Coweight& b) {
    if (a == b) return a;
    if (d.dominance_leq(a, b)) return a;
    if (d.dominance_leq(b, a)) return b;
    if (d.is_gl()) {
        // partial-sum minima give the dominance meet for gl(n)
        long ta = 0, tb = 0;
        for (size_t i = 0; i < a.size(); ++i) ta += a[i], tb += b[i];
        if (ta != tb) throw series_error("meet: incomparable totals");
        Coweight m(a.size(), 0);
        long sa = 0, sb = 0, prev = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            sa += a[i];
            sb += b[i];
            long s = std::min(sa, sb);
            m[i] = s - prev;
            prev = s;
        }
        return m;
    }
    throw series_error("meet of incomparable bases only supported for gl data");
}

ConeSeries operator*(const ConeSeries& f, const ConeSeries& g) {
    if (!(*f.datum_ == *g.datum_) || f.q_ != g.q_) throw series_error("series_mul: datum mismatch");
    long bound = std::min(f.height_bound_, g.height_bound_);
    ConeSeries out(*f.datum_, f.q_, vadd(f.base_, g.base_), bound);
    for (auto& [mu1, c1] : f.coeffs_) {
        long h1 = f.height_of(mu1);
        if (h1 > bound) continue;
        for (auto& [mu2, c2] : g.coeffs_) {
            if (h1 + g.height_of(mu2) > bound) continue;
            out.add_to(vadd(mu1, mu2), c1 * c2);
        }
    }
    return out;
}

ConeSeries operator+(const ConeSeries& f, const ConeSeries& g) {
    if (!(*f.datum_ == *g.datum_) || f.q_ != g.q_) throw series_error("series add: datum mismatch");
    Coweight b = ConeSeries::meet(*f.datum_, f.base_, g.base_);
    ConeSeries out(*f.datum_, f.q_, b, std::min(f.height_bound_, g.height_bound_));
    // measured from the common base, entries past the bound are dropped
    for (auto& [mu, c] : f.coeffs_)
        if (out.height_of(mu) <= out.height_bound_) out.add_to(mu, c);
    for (auto& [mu, c] : g.coeffs_)
        if (out.height_of(mu) <= out.height_bound_) out.add_to(mu, c);
    return out;
}

ConeSeries operator-(const ConeSeries& f, const ConeSeries& g) {
    return f + g.scaled(-Scalar::one(g.q()));
}

ConeSeries ConeSeries::scaled(const Scalar& c) const {
    ConeSeries out(*datum_, q_, base_, height_bound_);
    if (c.is_zero()) return out;
    for (auto& [mu, v] : coeffs_) out.coeffs_[mu] = v * c;
    return out;
}

std::optional<ConeSeries::Discrepancy> ConeSeries::first_difference(const ConeSeries& f,
                                                                    const ConeSeries& g,
                                                                    long height) {
    // heights are measured from the common lower base, and the request
    // must stay within the region where both series are complete
    Coweight b = meet(*f.datum_, f.base_, g.base_);
    long hb_f = f.height_bound_ + f.datum_->height2(vsub(f.base_, b));
    long hb_g = g.height_bound_ + g.datum_->height2(vsub(g.base_, b));
    if (height > hb_f || height > hb_g)
        throw series_error("comparison height exceeds a truncation bound");
    auto hrel = [&](const Coweight& mu) { return f.datum_->height2(vsub(mu, b)); };
    std::map<std::pair<long, Coweight>, std::pair<Scalar, Scalar>> keys;
    for (auto& [mu, c] : f.coeffs_) {
        long h = hrel(mu);
        if (h <= height) keys[{h, mu}] = {c, g.at(mu)};
    }
    for (auto& [mu, c] : g.coeffs_) {
        long h = hrel(mu);
        if (h <= height) {
            auto it = keys.find({h, mu});
            if (it == keys.end()) keys[{h, mu}] = {f.at(mu), c};
        }
    }
    for (auto& [hk, vals] : keys)
        if (!(vals.first == vals.second)) return Discrepancy{hk.second, vals.first, vals.second};
    return std::nullopt;
}

std::string ConeSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [mu, c] : coeffs_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*t^[" << vec_str(mu) << "]";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace eiscalc
