#include "eiscalc/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace eiscalc {

long dot(const Coweight& a, const Weight& b) {
    if (a.size() != b.size()) throw rootdata_error("pairing: rank mismatch");
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Coweight vadd(const Coweight& a, const Coweight& b) {
    Coweight r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Coweight vsub(const Coweight& a, const Coweight& b) {
    Coweight r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Coweight vneg(const Coweight& a) {
    Coweight r(a);
    for (auto& x : r) x = -x;
    return r;
}

Coweight vscale(long k, const Coweight& a) {
    Coweight r(a);
    for (auto& x : r) x *= k;
    return r;
}

std::string vec_str(const Coweight& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

Coweight parse_vec(const std::string& s) {
    Coweight v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw rootdata_error("parse_vec: empty component in '" + s + "'");
        size_t pos = 0;
        long x = std::stol(tok, &pos);
        if (pos != tok.size()) throw rootdata_error("parse_vec: bad integer '" + tok + "'");
        v.push_back(x);
    }
    return v;
}

Coweight WeylElement::apply(const Coweight& v) const {
    Coweight r(v.size(), 0);
    for (size_t j = 0; j < v.size(); ++j)
        for (size_t i = 0; i < v.size(); ++i) r[i] += matrix[j][i] * v[j];
    return r;
}

BasedRootDatum BasedRootDatum::gl(int n) {
    if (n < 1) throw rootdata_error("gl(n): n must be >= 1");
    std::vector<Coweight> coroots;
    std::vector<Weight> roots;
    for (int i = 0; i + 1 < n; ++i) {
        Coweight a(n, 0);
        a[i] = 1;
        a[i + 1] = -1;
        coroots.push_back(a);
        roots.push_back(a);
    }
    BasedRootDatum d(n, coroots, roots, "gl" + std::to_string(n));
    d.gl_n_ = n;
    return d;
}

BasedRootDatum BasedRootDatum::named(const std::string& name) {
    if (name.rfind("gl", 0) == 0) {
        int n = std::stoi(name.substr(2));
        return gl(n);
    }
    throw rootdata_error("unknown datum name '" + name + "'");
}

BasedRootDatum::BasedRootDatum(int rank, std::vector<Coweight> simple_coroots,
                               std::vector<Weight> simple_roots, std::string name)
    : rank_(rank),
      simple_coroots_(std::move(simple_coroots)),
      simple_roots_(std::move(simple_roots)),
      name_(std::move(name)) {
    if (rank_ < 0) throw rootdata_error("rank must be nonnegative");
    if (simple_coroots_.size() != simple_roots_.size())
        throw rootdata_error("coroot/root count mismatch");
    for (auto& v : simple_coroots_)
        if ((int)v.size() != rank_) throw rootdata_error("coroot of wrong rank");
    for (auto& v : simple_roots_)
        if ((int)v.size() != rank_) throw rootdata_error("root of wrong rank");
    for (int i = 0; i < num_simple(); ++i) {
        if (dot(simple_coroots_[i], simple_roots_[i]) != 2)
            throw rootdata_error("<alpha_i, alpha_i^> must equal 2");
        for (int j = 0; j < num_simple(); ++j)
            if (i != j && dot(simple_coroots_[i], simple_roots_[j]) > 0)
                throw rootdata_error("off-diagonal Cartan entries must be <= 0");
    }
    generate_positive_system();
}

void BasedRootDatum::generate_positive_system() {
    // closure of the simple (coroot, root) pairs under simple reflections,
    // keeping those that stay positive
    std::set<std::pair<Coweight, Weight>> seen;
    std::deque<std::pair<Coweight, Weight>> work;
    for (int i = 0; i < num_simple(); ++i) {
        auto p = std::make_pair(simple_coroots_[i], simple_roots_[i]);
        if (seen.insert(p).second) work.push_back(p);
    }
    const size_t limit = 512;  // far beyond any finite type at these ranks
    while (!work.empty()) {
        auto [cr, rt] = work.front();
        work.pop_front();
        for (int i = 0; i < num_simple(); ++i) {
            Coweight cr2 = vsub(cr, vscale(dot(cr, simple_roots_[i]), simple_coroots_[i]));
            Weight rt2 = vsub(rt, vscale(dot(simple_coroots_[i], rt), simple_roots_[i]));
            auto coeff = positive_coefficients_raw(cr2);
            if (!coeff) continue;  // not a positive coroot
            auto p = std::make_pair(cr2, rt2);
            if (seen.insert(p).second) {
                work.push_back(p);
                if (seen.size() > limit)
                    throw rootdata_error("positive system did not close: not finite type");
            }
        }
    }
    for (auto& [cr, rt] : seen) {
        pos_coroots_.push_back(cr);
        pos_roots_.push_back(rt);
    }
    rho_.assign(rank_, 0);
    rho_check_.assign(rank_, 0);
    for (auto& cr : pos_coroots_)
        for (int i = 0; i < rank_; ++i) rho_[i] += Rat(cr[i]) / 2;
    for (auto& rt : pos_roots_)
        for (int i = 0; i < rank_; ++i) rho_check_[i] += Rat(rt[i]) / 2;
    two_rho_check_.assign(rank_, 0);
    for (int i = 0; i < rank_; ++i) {
        Rat t = rho_check_[i] * 2;
        if (t.get_den() != 1) throw rootdata_error("2*rho_check not integral");
        two_rho_check_[i] = static_cast<long>(t.get_num().get_si());
    }
}

// Solve v = sum c_i * alpha_i over Q by elimination; nullptr-like on failure.
// The simple coroots are linearly independent for the data we accept.
std::optional<std::vector<long>> BasedRootDatum::positive_coefficients(const Coweight& v) const {
    return positive_coefficients_raw(v);
}

// member helper, defined out of line to keep the constructor readable
std::optional<std::vector<long>> BasedRootDatum::positive_coefficients_raw(
    const Coweight& v) const {
    int m = num_simple();
    if (m == 0) {
        for (long x : v)
            if (x != 0) return std::nullopt;
        return std::vector<long>{};
    }
    // rational Gaussian elimination on the rank x m system
    std::vector<std::vector<Rat>> A(rank_, std::vector<Rat>(m + 1));
    for (int i = 0; i < rank_; ++i) {
        for (int j = 0; j < m; ++j) A[i][j] = simple_coroots_[j][i];
        A[i][m] = v[i];
    }
    int row = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < m && row < rank_; ++col) {
        int pr = -1;
        for (int r = row; r < rank_; ++r)
            if (A[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(A[row], A[pr]);
        Rat p = A[row][col];
        for (int c = col; c <= m; ++c) A[row][c] /= p;
        for (int r = 0; r < rank_; ++r) {
            if (r == row || A[r][col] == 0) continue;
            Rat f = A[r][col];
            for (int c = col; c <= m; ++c) A[r][c] -= f * A[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }
    if ((int)pivot_col.size() < m) throw rootdata_error("simple coroots not independent");
    for (int r = row; r < rank_; ++r)
        if (A[r][m] != 0) return std::nullopt;  // v outside the span
    std::vector<long> out(m);
    for (int k = 0; k < m; ++k) {
        Rat c = A[k][m];
        if (c < 0 || c.get_den() != 1) return std::nullopt;
        out[pivot_col[k]] = static_cast<long>(c.get_num().get_si());
    }
    return out;
}

long BasedRootDatum::height2(const Coweight& v) const {
    long s = 0;
    for (int i = 0; i < rank_; ++i) s += v[i] * two_rho_check_[i];
    return s;
}

bool BasedRootDatum::is_dominant(const Coweight& v) const {
    for (auto& rt : simple_roots_)
        if (dot(v, rt) < 0) return false;
    return true;
}

bool BasedRootDatum::dominance_leq(const Coweight& a, const Coweight& b) const {
    if (a.size() != b.size() || (int)a.size() != rank_)
        throw rootdata_error("dominance_leq: rank mismatch");
    return positive_coefficients(vsub(b, a)).has_value();
}

Coweight BasedRootDatum::reflect(int i, const Coweight& v) const {
    if (i < 0 || i >= num_simple()) throw rootdata_error("simple reflection index out of range");
    return vsub(v, vscale(dot(v, simple_roots_[i]), simple_coroots_[i]));
}

WeylElement BasedRootDatum::simple_reflection(int i) const {
    WeylElement w = identity_element();
    w.word = {i};
    for (int j = 0; j < rank_; ++j) {
        Coweight e(rank_, 0);
        e[j] = 1;
        w.matrix[j] = reflect(i, e);
    }
    return w;
}

const WeylElement& BasedRootDatum::identity_element() const {
    return weyl_group().front();
}

// w = s_{word[0]} s_{word[1]} ... ; the rightmost letter acts first
WeylElement BasedRootDatum::word_element(const std::vector<int>& word) const {
    WeylElement out;
    out.word = word;
    out.matrix.assign(rank_, Coweight(rank_, 0));
    for (int j = 0; j < rank_; ++j) {
        Coweight e(rank_, 0);
        e[j] = 1;
        for (auto it = word.rbegin(); it != word.rend(); ++it) e = reflect(*it, e);
        out.matrix[j] = e;
    }
    return out;
}

void BasedRootDatum::generate_weyl() const {
    std::map<std::vector<Coweight>, std::vector<int>> found;
    WeylElement id;
    id.matrix.assign(rank_, Coweight(rank_, 0));
    for (int j = 0; j < rank_; ++j) id.matrix[j][j] = 1;
    found[id.matrix] = {};
    std::deque<WeylElement> work{id};
    const size_t limit = 5041;  // 7! + 1
    while (!work.empty()) {
        WeylElement w = work.front();
        work.pop_front();
        for (int i = 0; i < num_simple(); ++i) {
            WeylElement w2;  // s_i composed after w, so the new letter is leftmost
            w2.word.assign(1, i);
            w2.word.insert(w2.word.end(), w.word.begin(), w.word.end());
            w2.matrix = w.matrix;
            for (auto& col : w2.matrix) col = reflect(i, col);
            if (found.emplace(w2.matrix, w2.word).second) {
                work.push_back(w2);
                if (found.size() > limit)
                    throw rootdata_error("Weyl group generation limit exceeded");
            }
        }
    }
    weyl_.clear();
    for (auto& [m, word] : found) {
        WeylElement w;
        w.matrix = m;
        w.word = word;
        weyl_.push_back(w);
    }
    // identity first, longest element findable by length; sort by length then matrix
    std::sort(weyl_.begin(), weyl_.end(), [](const WeylElement& x, const WeylElement& y) {
        if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
        return x.matrix < y.matrix;
    });
}

const std::vector<WeylElement>& BasedRootDatum::weyl_group() const {
    if (weyl_.empty()) generate_weyl();
    return weyl_;
}

const WeylElement& BasedRootDatum::w0() const {
    return weyl_group().back();
}

Coweight BasedRootDatum::dominant_representative(const Coweight& v) const {
    Coweight x = v;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < num_simple(); ++i) {
            if (dot(x, simple_roots_[i]) < 0) {
                x = reflect(i, x);
                moved = true;
            }
        }
    }
    return x;
}

BasedRootDatum BasedRootDatum::levi(const std::vector<int>& subset) const {
    std::vector<Coweight> cr;
    std::vector<Weight> rt;
    for (int i : subset) {
        if (i < 0 || i >= num_simple()) throw rootdata_error("levi: vertex index out of range");
        cr.push_back(simple_coroots_[i]);
        rt.push_back(simple_roots_[i]);
    }
    return BasedRootDatum(rank_, cr, rt, name_ + "-levi");
}

}  // namespace eiscalc
