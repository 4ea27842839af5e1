#include "eiscalc/scalar.hpp"

#include <sstream>

namespace eiscalc {

long Scalar::exact_sqrt(long q) {
    long r = 1;
    while (r * r < q) ++r;
    return r * r == q ? r : 0;
}

Scalar Scalar::root_pow(long q, long k) {
    // q^{floor(|k|/2)}, with one leftover r when |k| is odd
    long m = k >= 0 ? k : -k;
    Rat qa(q);
    Rat acc(1);
    for (long i = 0; i < m / 2; ++i) acc *= qa;
    Scalar v = (m % 2 == 0) ? rational(acc, q) : Scalar(0, acc, q);
    if (k >= 0) return v;
    return v.inverse();
}

Scalar Scalar::pow(long k) const {
    if (k == 0) return one(q_);
    Scalar base = k > 0 ? *this : inverse();
    long m = k > 0 ? k : -k;
    Scalar acc = one(q_);
    while (m > 0) {
        if (m & 1) acc *= base;
        base *= base;
        m >>= 1;
    }
    return acc;
}

std::string Scalar::str() const {
    std::ostringstream os;
    if (b_ == 0) {
        os << a_;
        return os.str();
    }
    if (a_ != 0) {
        os << a_;
        if (b_ > 0) os << "+";
    }
    if (b_ == -1)
        os << "-";
    else if (b_ != 1)
        os << b_ << "*";
    os << "r";
    return os.str();
}

bool is_prime_power(long q) {
    if (q < 2) return false;
    long p = 2;
    while (p * p <= q) {
        if (q % p == 0) {
            while (q % p == 0) q /= p;
            return q == 1;
        }
        ++p;
    }
    return true;  // q itself prime
}

}  // namespace eiscalc
