#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eiscalc/scalar.hpp"

namespace eiscalc {

// Lattice vectors in the coweight lattice L = Z^rank and its dual.
using Coweight = std::vector<long>;
using Weight = std::vector<long>;
using RatVec = std::vector<Rat>;

long dot(const Coweight& a, const Weight& b);
Coweight vadd(const Coweight& a, const Coweight& b);
Coweight vsub(const Coweight& a, const Coweight& b);
Coweight vneg(const Coweight& a);
Coweight vscale(long k, const Coweight& a);
std::string vec_str(const Coweight& v);
Coweight parse_vec(const std::string& s);

struct rootdata_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/*
  A Weyl group element, stored as a reduced word in the simple
  reflections together with the induced automorphism of the coweight
  lattice.  The matrix is what equality compares; words are one choice
  among many.
*/
struct WeylElement {
    std::vector<int> word;
    std::vector<Coweight> matrix;  // columns: images of basis vectors

    Coweight apply(const Coweight& v) const;
    int length() const { return static_cast<int>(word.size()); }
    int sign() const { return word.size() % 2 == 0 ? 1 : -1; }
    bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
    bool operator<(const WeylElement& o) const { return matrix < o.matrix; }
};

/*
  Based root datum: the coweight lattice Z^rank, simple coroots inside
  it, simple roots in the dual, and the standard pairing.  Positive
  coroots are generated eagerly at construction together with the
  matching positive roots, so a datum that fails to be of finite type
  is rejected up front.

  The constructors for GL(n) use coroots e_i - e_{i+1} and the same
  vectors in the dual basis as roots.  Fundamental weights, where
  needed, follow the convention (1,...,1,0,...,0).
*/
class BasedRootDatum {
  public:
    static BasedRootDatum gl(int n);
    // by name: "gl1", "gl2", ... ; anything else is rejected
    static BasedRootDatum named(const std::string& name);
    BasedRootDatum(int rank, std::vector<Coweight> simple_coroots,
                   std::vector<Weight> simple_roots, std::string name = "custom");

    int rank() const { return rank_; }
    const std::string& name() const { return name_; }
    int num_simple() const { return static_cast<int>(simple_coroots_.size()); }
    const std::vector<Coweight>& simple_coroots() const { return simple_coroots_; }
    const std::vector<Weight>& simple_roots() const { return simple_roots_; }

    // positive coroots, each with the positive root it pairs with
    const std::vector<Coweight>& positive_coroots() const { return pos_coroots_; }
    const std::vector<Weight>& positive_roots() const { return pos_roots_; }

    // rho: half sum of positive coroots; rho_check: of positive roots
    const RatVec& rho() const { return rho_; }
    const RatVec& rho_check() const { return rho_check_; }

    // <v, 2 rho_check>, integral on the root lattice; the height grading
    long height2(const Coweight& v) const;

    bool is_dominant(const Coweight& v) const;
    // b - a a nonnegative integer combination of simple coroots?
    bool dominance_leq(const Coweight& a, const Coweight& b) const;
    // coefficients of v in the simple-coroot basis, if integral >= 0
    std::optional<std::vector<long>> positive_coefficients(const Coweight& v) const;

    const std::vector<WeylElement>& weyl_group() const;
    const WeylElement& w0() const;
    const WeylElement& identity_element() const;
    WeylElement simple_reflection(int i) const;
    WeylElement word_element(const std::vector<int>& word) const;
    Coweight reflect(int i, const Coweight& v) const;  // s_i on the coweight side

    // dominant representative of the W-orbit of v
    Coweight dominant_representative(const Coweight& v) const;

    BasedRootDatum levi(const std::vector<int>& subset) const;

    bool is_gl() const { return gl_n_ > 0; }
    int gl_n() const { return gl_n_; }

    bool operator==(const BasedRootDatum& o) const {
        return rank_ == o.rank_ && simple_coroots_ == o.simple_coroots_ &&
               simple_roots_ == o.simple_roots_;
    }

  private:
    void generate_positive_system();
    void generate_weyl() const;
    std::optional<std::vector<long>> positive_coefficients_raw(const Coweight& v) const;

    int rank_;
    std::vector<Coweight> simple_coroots_;
    std::vector<Weight> simple_roots_;
    std::string name_;
    int gl_n_ = 0;

    std::vector<Coweight> pos_coroots_;
    std::vector<Weight> pos_roots_;
    RatVec rho_, rho_check_;
    std::vector<long> two_rho_check_;

    mutable std::vector<WeylElement> weyl_;  // filled on first use
};

}  // namespace eiscalc
