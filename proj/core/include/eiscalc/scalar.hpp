#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace eiscalc {

using Rat = mpq_class;
using Int = mpz_class;

struct arithmetic_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/*
  Element a + b*r of Q(r), r a formal square root of the fixed prime
  power q.  When q is itself a perfect square, r is rational and every
  value is normalized to the form (a, 0), so equality stays
  component-wise.  Arithmetic is exact throughout.
*/
class Scalar {
  public:
    Scalar() : q_(0) {}
    Scalar(Rat a, Rat b, long q) : a_(std::move(a)), b_(std::move(b)), q_(q) {
        if (q <= 1) throw arithmetic_error("Scalar: q must be a prime power >= 2");
        normalize();
    }
    static Scalar rational(Rat a, long q) { return Scalar(std::move(a), 0, q); }
    static Scalar zero(long q) { return rational(0, q); }
    static Scalar one(long q) { return rational(1, q); }
    // r itself, i.e. sqrt(q)
    static Scalar root(long q) { return Scalar(0, 1, q); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    long q() const { return q_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        x.match(y);
        return Scalar(x.a_ + y.a_, x.b_ + y.b_, x.q_);
    }
    friend Scalar operator-(const Scalar& x, const Scalar& y) {
        x.match(y);
        return Scalar(x.a_ - y.a_, x.b_ - y.b_, x.q_);
    }
    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        x.match(y);
        return Scalar(x.a_ * y.a_ + Rat(x.q_) * x.b_ * y.b_,
                      x.a_ * y.b_ + x.b_ * y.a_, x.q_);
    }
    friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }
    Scalar operator-() const { return Scalar(-a_, -b_, q_); }

    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

    Scalar inverse() const {
        if (is_zero()) throw arithmetic_error("Scalar: division by zero");
        // (a + b r)(a - b r) = a^2 - q b^2, nonzero for q not a square
        // (square q never reaches here with b != 0 after normalization)
        Rat n = a_ * a_ - Rat(q_) * b_ * b_;
        if (n == 0) throw arithmetic_error("Scalar: non-invertible element");
        return Scalar(a_ / n, -b_ / n, q_);
    }

    bool operator==(const Scalar& y) const { return q_ == y.q_ && a_ == y.a_ && b_ == y.b_; }
    bool operator!=(const Scalar& y) const { return !(*this == y); }
    bool operator<(const Scalar& y) const {
        if (a_ != y.a_) return a_ < y.a_;
        return b_ < y.b_;
    }

    // r^k for k of either sign: even k gives q^{k/2}, odd keeps one r
    static Scalar root_pow(long q, long k);
    // integer powers of a scalar (negative allowed, exact)
    Scalar pow(long k) const;

    std::string str() const;

  private:
    void match(const Scalar& y) const {
        if (q_ != y.q_) throw arithmetic_error("Scalar: mixed base q");
    }
    void normalize() {
        if (b_ != 0) {
            long r = exact_sqrt(q_);
            if (r > 0) {
                a_ += b_ * r;
                b_ = 0;
            }
        }
        a_.canonicalize();
        b_.canonicalize();
    }
    static long exact_sqrt(long q);

    Rat a_, b_;
    long q_;
};

bool is_prime_power(long q);

}  // namespace eiscalc
