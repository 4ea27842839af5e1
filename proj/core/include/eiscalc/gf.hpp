#pragma once

#include <stdexcept>
#include <vector>

namespace eiscalc {

/*
  Tiny Galois field F_q for prime powers q = p^e (e <= 3), elements
  encoded as 0..q-1 (base-p digit vectors of polynomial coefficients).
  Only used for fiber-subspace linear algebra, so lookup tables suffice.
*/
class GF {
  public:
    explicit GF(long q);
    long q() const { return q_; }
    int add(int a, int b) const { return add_[a * q_ + b]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const;

    // rank of a matrix given as row vectors over F_q
    int rank(std::vector<std::vector<int>> rows) const;

    // all m-dimensional subspaces of F_q^n, each as a row-echelon basis
    std::vector<std::vector<std::vector<int>>> subspaces(int n, int m) const;

  private:
    long q_;
    int p_, e_;
    std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace eiscalc
