#pragma once

#include <functional>
#include <map>
#include <optional>

#include "eiscalc/rootdata.hpp"

namespace eiscalc {

/*
  Element of the completed group ring: a formal sum  sum a_mu t^mu  whose
  support lies in  base + (positive span of simple coroots), truncated at
  the height bound  <mu - base, 2 rho_check> <= N.  Keys outside the cone
  or past the bound are rejected; zero coefficients are dropped.
*/
class ConeSeries {
  public:
    ConeSeries(const BasedRootDatum& datum, long q, Coweight base, long height_bound);

    static ConeSeries unit(const BasedRootDatum& datum, long q, long height_bound);
    // c * t^mu as a series based at mu
    static ConeSeries monomial(const BasedRootDatum& datum, long q, const Coweight& mu,
                               const Scalar& c, long height_bound);

    const BasedRootDatum& datum() const { return *datum_; }
    long q() const { return q_; }
    const Coweight& base() const { return base_; }
    long height_bound() const { return height_bound_; }
    const std::map<Coweight, Scalar>& coeffs() const { return coeffs_; }

    void set(const Coweight& mu, const Scalar& c);
    void add_to(const Coweight& mu, const Scalar& c);
    Scalar at(const Coweight& mu) const;  // zero when absent
    bool is_zero() const { return coeffs_.empty(); }
    long height_of(const Coweight& mu) const { return datum_->height2(vsub(mu, base_)); }

    ConeSeries truncated(long new_bound) const;
    // base moved down to b (must satisfy b <= base in dominance); keeps
    // only coefficients within the bound measured from the new base
    ConeSeries rebased(const Coweight& b) const;

    friend ConeSeries operator*(const ConeSeries& f, const ConeSeries& g);
    friend ConeSeries operator+(const ConeSeries& f, const ConeSeries& g);
    friend ConeSeries operator-(const ConeSeries& f, const ConeSeries& g);
    ConeSeries scaled(const Scalar& c) const;

    struct Discrepancy {
        Coweight mu;
        Scalar lhs, rhs;
    };
    // exact comparison of all coefficients up to the given height;
    // reports the lowest (height, then lex) discrepant term
    static std::optional<Discrepancy> first_difference(const ConeSeries& f, const ConeSeries& g,
                                                       long height);

    std::string str() const;

  private:
    // greatest common lower bound of two bases in dominance order
    static Coweight meet(const BasedRootDatum& d, const Coweight& a, const Coweight& b);

    const BasedRootDatum* datum_;
    long q_;
    Coweight base_;
    long height_bound_;
    std::map<Coweight, Scalar> coeffs_;
};

struct series_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace eiscalc
