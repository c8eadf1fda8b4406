#pragma once

#include "qflag/qseries.hpp"
#include "qflag/rational.hpp"
#include "qflag/weight.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace qflag {

enum class Family { A, B };

using EpsVec = std::vector<Rat>;  // coordinates in the epsilon basis

/// Root-system data for A_{n-1} = sl_n and B_n = so_{2n+1}.
///
/// Everything is kept in epsilon coordinates: for the A series an
/// overcomplete basis with (eps_i, eps_j) = delta_ij - 1/n, for the B series
/// an orthonormal basis.  The B normalization puts the long roots at
/// norm^2 = 2 and the short root at norm^2 = 1.
struct LieAlgebra {
    Family family;
    int rank;
    int eps_dim;                       // n for A_{n-1}, n for B_n
    std::vector<EpsVec> simple_roots;
    std::vector<EpsVec> fundamental;   // representative eps vectors of Lambda_i
    std::vector<EpsVec> positive_roots;
    std::vector<Rat> root_norm2;       // (alpha_i, alpha_i)
    std::vector<Int> fund_dims;        // D_i = dim L(Lambda_i)

    Rat pairing(const EpsVec& u, const EpsVec& v) const {
        Rat s = 0, su = 0, sv = 0;
        for (int i = 0; i < eps_dim; ++i) {
            s += u[i] * v[i];
            su += u[i];
            sv += v[i];
        }
        if (family == Family::A) s -= su * sv / eps_dim;
        return s;
    }

    /// Dynkin labels (lambda, alpha_i^vee) of an eps vector.
    Weight dynkin(const EpsVec& v) const {
        std::vector<int> d(rank);
        for (int i = 0; i < rank; ++i)
            d[i] = (int)to_int(2 * pairing(v, simple_roots[i]) / root_norm2[i]);
        return Weight(std::move(d));
    }

    EpsVec eps_of(const Weight& w) const {
        EpsVec v(eps_dim, Rat(0));
        for (int i = 0; i < rank; ++i)
            for (int k = 0; k < eps_dim; ++k) v[k] += w.d[i] * fundamental[i][k];
        return v;
    }

    Weight rho() const { return Weight(std::vector<int>(rank, 1)); }

    /// Contragredient highest weight: reversal for the A series, identity
    /// for the B series (-w0 action on dominant weights).
    Weight dual_weight(const Weight& w) const {
        if (family == Family::A) {
            std::vector<int> d(w.d.rbegin(), w.d.rend());
            return Weight(std::move(d));
        }
        return w;
    }

    /// Solve diff = sum c_i alpha_i over the simple roots; exact rationals.
    std::vector<Rat> root_coefficients(const Weight& diff) const {
        // Gram system G c = [(diff, alpha_j)]
        int l = rank;
        std::vector<std::vector<Rat>> m(l, std::vector<Rat>(l + 1));
        EpsVec de = eps_of(diff);
        for (int i = 0; i < l; ++i) {
            for (int j = 0; j < l; ++j) m[i][j] = pairing(simple_roots[i], simple_roots[j]);
            m[i][l] = pairing(simple_roots[i], de);
        }
        for (int col = 0; col < l; ++col) {
            int piv = -1;
            for (int r = col; r < l; ++r)
                if (m[r][col] != 0) { piv = r; break; }
            if (piv < 0) throw std::logic_error("degenerate Gram matrix");
            std::swap(m[col], m[piv]);
            Rat p = m[col][col];
            for (int c = col; c <= l; ++c) m[col][c] /= p;
            for (int r = 0; r < l; ++r) {
                if (r == col || m[r][col] == 0) continue;
                Rat f = m[r][col];
                for (int c = col; c <= l; ++c) m[r][c] -= f * m[col][c];
            }
        }
        std::vector<Rat> c(l);
        for (int i = 0; i < l; ++i) c[i] = m[i][l];
        return c;
    }

    /// mu <= lambda in dominance order (difference a nonnegative rational
    /// combination of simple roots).
    bool dominance_leq(const Weight& mu, const Weight& lambda) const {
        auto c = root_coefficients(lambda - mu);
        for (const auto& x : c)
            if (x < 0) return false;
        return true;
    }
};

inline LieAlgebra build_algebra(Family family, int rank) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    if (family == Family::B && rank < 2) throw std::invalid_argument("B series needs rank >= 2");
    LieAlgebra g;
    g.family = family;
    g.rank = rank;
    g.eps_dim = (family == Family::A) ? rank + 1 : rank;
    int n = g.eps_dim;
    auto e = [&](int i) {
        EpsVec v(n, Rat(0));
        v[i] = 1;
        return v;
    };
    for (int i = 0; i < rank; ++i) {
        EpsVec a(n, Rat(0));
        if (family == Family::A || i + 1 < rank) {
            a[i] = 1;
            a[i + 1] = -1;
        } else {
            a[i] = 1;  // short root eps_n of B_n
        }
        g.simple_roots.push_back(a);
        EpsVec f(n, Rat(0));
        for (int k = 0; k <= i; ++k) f[k] = 1;
        if (family == Family::B && i + 1 == rank)
            for (auto& x : f) x /= 2;  // spinor weight
        g.fundamental.push_back(f);
    }
    for (int i = 0; i < rank; ++i) g.root_norm2.push_back(g.pairing(g.simple_roots[i], g.simple_roots[i]));
    if (family == Family::A) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                EpsVec v(n, Rat(0));
                v[i] = 1;
                v[j] = -1;
                g.positive_roots.push_back(v);
            }
        for (int i = 1; i <= rank; ++i) g.fund_dims.push_back(binomial(Int(n), i));
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                EpsVec v(n, Rat(0));
                v[i] = 1; v[j] = -1;
                g.positive_roots.push_back(v);
                v[j] = 1;
                g.positive_roots.push_back(v);
            }
        for (int i = 0; i < n; ++i) g.positive_roots.push_back(e(i));
        for (int i = 1; i < rank; ++i) g.fund_dims.push_back(binomial(Int(2 * rank + 1), i));
        g.fund_dims.push_back(Int(1) << rank);
    }
    // Cartan pairing sanity: (Lambda_i, alpha_j^vee) = delta_ij
    for (int i = 0; i < rank; ++i) {
        Weight d = g.dynkin(g.fundamental[i]);
        for (int j = 0; j < rank; ++j)
            if (d.d[j] != (i == j ? 1 : 0))
                throw std::logic_error("Cartan pairing check failed");
    }
    return g;
}

// ---------------------------------------------------------------------------
// Weights of the coordinate representations
// ---------------------------------------------------------------------------

/// Labelled weights of L(Lambda_i), in the paper's coordinate conventions.
/// A series: all fundamentals, labels x_{i1...ik}.  B series: the vector
/// (i = 1) and spinor (i = n) representations only.
inline std::vector<std::pair<std::string, Weight>> rep_weights(const LieAlgebra& g, int i) {
    if (i < 1 || i > g.rank) throw std::invalid_argument("fundamental index out of range");
    std::vector<std::pair<std::string, Weight>> out;
    if (g.family == Family::A) {
        int n = g.eps_dim;
        std::vector<int> idx(i);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            EpsVec v(n, Rat(0));
            std::string name = "x";
            for (int k : idx) {
                v[k] = 1;
                name += std::to_string(k + 1);
            }
            out.emplace_back(name, g.dynkin(v));
            int p = i - 1;
            while (p >= 0 && idx[p] == n - i + p) --p;
            if (p < 0) break;
            ++idx[p];
            for (int q = p + 1; q < i; ++q) idx[q] = idx[q - 1] + 1;
        }
        return out;
    }
    int n = g.rank;
    if (i == 1) {
        // eps_1, ..., eps_n, 0, -eps_n, ..., -eps_1
        for (int k = 0; k < n; ++k) {
            EpsVec v(n, Rat(0));
            v[k] = 1;
            out.emplace_back("x" + std::to_string(k + 1), g.dynkin(v));
        }
        out.emplace_back("x0", Weight::zero(n));
        for (int k = n - 1; k >= 0; --k) {
            EpsVec v(n, Rat(0));
            v[k] = -1;
            out.emplace_back("x" + std::to_string(k + 1) + "b", g.dynkin(v));
        }
        return out;
    }
    if (i == n) {
        // spinor weights (+-...+-)/2, ordered by descending number of plus
        // signs, then lexicographically with '+' before '-'
        std::vector<unsigned> patterns;
        for (unsigned p = 0; p < (1u << n); ++p) patterns.push_back(p);
        std::sort(patterns.begin(), patterns.end(), [&](unsigned a, unsigned b) {
            int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
            if (ca != cb) return ca > cb;
            return a > b;
        });
        for (unsigned p : patterns) {
            EpsVec v(n, Rat(0));
            std::string name = "x";
            for (int k = 0; k < n; ++k) {
                bool plus = (p >> (n - 1 - k)) & 1;  // bit n-1-k is sign of eps_{k+1}
                v[k] = plus ? Rat(1, 2) : Rat(-1, 2);
                name += plus ? 'p' : 'm';
            }
            out.emplace_back(name, g.dynkin(v));
        }
        return out;
    }
    throw std::invalid_argument("weights not implemented for this fundamental (B series: only L(Lambda_1) and L(Lambda_n))");
}

// ---------------------------------------------------------------------------
// Characters
// ---------------------------------------------------------------------------

struct Character {
    std::map<Weight, Int> mult;

    static Character trivial(std::size_t rank) {
        Character c;
        c.mult[Weight::zero(rank)] = 1;
        return c;
    }

    bool is_zero() const { return mult.empty(); }
    Int mass() const {
        Int s = 0;
        for (const auto& [w, m] : mult) s += m;
        return s;
    }
    void add(const Weight& w, const Int& m) {
        auto it = mult.find(w);
        if (it == mult.end()) {
            if (m != 0) mult.emplace(w, m);
        } else {
            it->second += m;
            if (it->second == 0) mult.erase(it);
        }
    }

    friend Character operator+(const Character& x, const Character& y) {
        Character r = x;
        for (const auto& [w, m] : y.mult) r.add(w, m);
        return r;
    }
    friend Character operator-(const Character& x, const Character& y) {
        Character r = x;
        for (const auto& [w, m] : y.mult) r.add(w, -m);
        return r;
    }
    friend Character operator*(const Character& x, const Character& y) {
        Character r;
        for (const auto& [w1, m1] : x.mult)
            for (const auto& [w2, m2] : y.mult) r.add(w1 + w2, m1 * m2);
        return r;
    }
    friend Character operator*(const Int& s, const Character& x) {
        Character r;
        for (const auto& [w, m] : x.mult) r.add(w, s * m);
        return r;
    }
    friend bool operator==(const Character&, const Character&) = default;

    /// contragredient: negate every weight
    Character dual() const {
        Character r;
        for (const auto& [w, m] : mult) r.add(-w, m);
        return r;
    }

    /// character of the symmetric square, via ch Sym^2 V = (chi(g)^2 + chi(g^2))/2
    Character sym2() const {
        Character sq = (*this) * (*this);
        for (const auto& [w, m] : mult) sq.add(2 * w, m);
        Character r;
        for (const auto& [w, m] : sq.mult) {
            if (m % 2 != 0) throw std::logic_error("sym2: odd multiplicity");
            r.add(w, m / 2);
        }
        return r;
    }

    /// apply the simple reflection s_i to the support (for symmetry tests)
    Character reflected(const LieAlgebra& g, int i) const {
        Character r;
        for (const auto& [w, m] : mult) {
            Weight img = w;
            int wi = w.d[i];
            Weight alpha_dyn = g.dynkin(g.simple_roots[i]);
            img = img - wi * alpha_dyn;
            r.add(img, m);
        }
        return r;
    }
};

inline Character character_of(const std::vector<std::pair<std::string, Weight>>& ws) {
    Character c;
    for (const auto& [name, w] : ws) c.add(w, 1);
    return c;
}

inline Int weyl_dim(const LieAlgebra& g, const Weight& lambda) {
    if (!lambda.is_dominant()) throw std::domain_error("weyl_dim: weight not dominant");
    EpsVec le = g.eps_of(lambda);
    EpsVec re = g.eps_of(g.rho());
    Rat num = 1, den = 1;
    for (const auto& a : g.positive_roots) {
        Rat lr = 0, rr = 0;
        for (int k = 0; k < g.eps_dim; ++k) {
            lr += (le[k] + re[k]) * a[k];
            rr += re[k] * a[k];
        }
        if (g.family == Family::A) {
            // sum over eps of any positive root is 0, so no 1/n correction
        }
        num *= lr;
        den *= rr;
    }
    return to_int(num / den);
}

/// Freudenthal's recursion.  Multiplicities are computed level by level in
/// the root lattice inside the box lambda - [0, c_max] . alpha, where c_max
/// are the simple-root coordinates of lambda + lambda^*.
inline Character freudenthal_character(const LieAlgebra& g, const Weight& lambda) {
    if (!lambda.is_dominant()) throw std::domain_error("character: weight not dominant");
    const int l = g.rank;
    EpsVec lam_e = g.eps_of(lambda);
    EpsVec rho_e = g.eps_of(g.rho());
    EpsVec lamrho(lam_e);
    for (int k = 0; k < g.eps_dim; ++k) lamrho[k] += rho_e[k];
    Rat nlr = g.pairing(lamrho, lamrho);

    auto cm = g.root_coefficients(lambda + g.dual_weight(lambda));
    std::vector<int> cmax(l);
    for (int i = 0; i < l; ++i) cmax[i] = (int)to_int(Rat(cm[i]));  // integral for lambda+lambda*

    // enumerate the box by level
    std::vector<std::vector<int>> box;
    {
        std::vector<int> c(l, 0);
        while (true) {
            box.push_back(c);
            int p = l - 1;
            while (p >= 0 && c[p] == cmax[p]) { c[p] = 0; --p; }
            if (p < 0) break;
            ++c[p];
        }
        std::stable_sort(box.begin(), box.end(), [](const auto& a, const auto& b) {
            return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
        });
    }

    // eps vectors keyed exactly; use the rational vector as map key
    std::map<EpsVec, Int> by_eps;
    for (const auto& c : box) {
        EpsVec mu = lam_e;
        int lvl = 0;
        for (int i = 0; i < l; ++i) {
            lvl += c[i];
            for (int k = 0; k < g.eps_dim; ++k) mu[k] -= c[i] * g.simple_roots[i][k];
        }
        if (lvl == 0) {
            by_eps[mu] = 1;
            continue;
        }
        EpsVec murho = mu;
        for (int k = 0; k < g.eps_dim; ++k) murho[k] += rho_e[k];
        Rat den = nlr - g.pairing(murho, murho);
        if (den <= 0) {
            by_eps[mu] = 0;
            continue;
        }
        Rat s = 0;
        for (const auto& a : g.positive_roots) {
            for (int k = 1; k <= lvl; ++k) {
                EpsVec nu = mu;
                for (int t = 0; t < g.eps_dim; ++t) nu[t] += k * a[t];
                auto it = by_eps.find(nu);
                if (it != by_eps.end() && it->second != 0) s += Rat(it->second) * g.pairing(nu, a);
            }
        }
        Rat m = 2 * s / den;
        by_eps[mu] = to_int(m);
    }

    Character ch;
    for (const auto& [mu, m] : by_eps)
        if (m != 0) ch.add(g.dynkin(mu), m);
    if (ch.mass() != weyl_dim(g, lambda)) throw std::logic_error("Freudenthal mass mismatch");
    return ch;
}

/// Memoized front end; the conjecture checks ask for the same characters
/// over and over.
inline Character irreducible_character(const LieAlgebra& g, const Weight& lambda) {
    using Key = std::tuple<int, int, std::vector<int>>;
    static std::map<Key, Character> cache;
    static std::mutex mtx;
    Key key{(int)g.family, g.rank, lambda.d};
    {
        std::scoped_lock lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Character ch = freudenthal_character(g, lambda);
    std::scoped_lock lock(mtx);
    return cache.emplace(key, std::move(ch)).first->second;
}

/// Strip a virtual character into irreducible multiplicities.  Repeatedly
/// removes the dominance-maximal (lex tie-break) weight; a maximal weight
/// that is not dominant means the input was not Weyl-symmetric.
inline std::map<Weight, Int> decompose(const LieAlgebra& g, const Character& input) {
    Character ch = input;
    std::map<Weight, Int> out;
    // height functional (lambda, rho^vee)-style: level in the root lattice,
    // used to shortlist dominance-maximal candidates cheaply
    auto height = [&](const Weight& w) {
        auto c = g.root_coefficients(w);  // coordinates of w itself over roots
        Rat s = 0;
        for (const auto& x : c) s += x;
        return s;
    };
    int guard = 0;
    while (!ch.mult.empty()) {
        if (++guard > 200000) throw std::runtime_error("decompose: not terminating; not a virtual character?");
        // maximal height, then lex-largest
        const Weight* best = nullptr;
        Rat best_h;
        for (const auto& [w, m] : ch.mult) {
            Rat h = height(w);
            if (!best || h > best_h || (h == best_h && w > *best)) {
                best = &w;
                best_h = h;
            }
        }
        Weight top = *best;
        if (!top.is_dominant())
            throw std::domain_error("decompose: support is not a virtual character (non-dominant maximal weight " + top.str() + ")");
        Int c = ch.mult.at(top);
        out[top] += c;
        Character irr = irreducible_character(g, top);
        ch = ch - c * irr;
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

/// Layer-by-layer decomposition of a character-valued q-polynomial.
inline std::map<Weight, QPolynomial> decompose_layers(const LieAlgebra& g,
                                                      const std::map<Weight, QPolynomial>& input) {
    long deg = -1;
    for (const auto& [w, p] : input) deg = std::max(deg, p.degree());
    std::map<Weight, std::vector<Int>> acc;
    for (long k = 0; k <= deg; ++k) {
        Character layer;
        for (const auto& [w, p] : input) layer.add(w, p.coeff(k));
        for (const auto& [mu, c] : decompose(g, layer)) {
            auto& v = acc[mu];
            v.resize(deg + 1, Int(0));
            v[k] = c;
        }
    }
    std::map<Weight, QPolynomial> out;
    for (auto& [mu, v] : acc) {
        QPolynomial p(std::move(v));
        if (!p.is_zero()) out.emplace(mu, std::move(p));
    }
    return out;
}

/// Character acting on a CharacterQSeries: convolution of supports.
inline CharacterQSeries operator*(const Character& c, const CharacterQSeries& x) {
    CharacterQSeries r(x.order);
    for (const auto& [w1, m] : c.mult)
        for (const auto& [w2, s] : x.entries) r.add(w1 + w2, m * s);
    return r;
}

} // namespace qflag
