#pragma once

#include "qflag/sqrt2.hpp"
#include "qflag/weight.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qflag {

/// A graded polynomial variable: a name, a multidegree (one slot per
/// fundamental weight of the ambient algebra) and a Lie-algebra weight.
struct GradedVariable {
    std::string name;
    std::vector<int> degree;
    Weight weight;
};

using Exps = std::vector<int>;

inline bool exps_divides(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}
inline Exps exps_mul(const Exps& a, const Exps& b) {
    Exps r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}
inline Exps exps_sub(const Exps& a, const Exps& b) {
    Exps r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}
inline Exps exps_lcm(const Exps& a, const Exps& b) {
    Exps r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}
inline int exps_total(const Exps& a) {
    int s = 0;
    for (int x : a) s += x;
    return s;
}

/// The ambient list of variables.  Storage order is the canonical
/// declaration order; monomial orders are permutations of it.
struct VariableSet {
    std::vector<GradedVariable> vars;

    std::size_t size() const { return vars.size(); }
    std::size_t grading_length() const { return vars.empty() ? 0 : vars[0].degree.size(); }

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i].name == name) return (int)i;
        throw std::invalid_argument("unknown variable: " + name);
    }

    std::vector<int> multidegree(const Exps& e) const {
        std::vector<int> d(grading_length(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i])
                for (std::size_t k = 0; k < d.size(); ++k) d[k] += e[i] * vars[i].degree[k];
        return d;
    }

    Weight weight(const Exps& e) const {
        Weight w = Weight::zero(vars[0].weight.rank());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) w = w + e[i] * vars[i].weight;
        return w;
    }

    std::string monomial_str(const Exps& e) const {
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!s.empty()) s += "*";
            s += vars[i].name;
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s.empty() ? "1" : s;
    }
};

/// Exact multivariate polynomial over Q(sqrt 2); terms keyed by exponent
/// vector in storage order.  Leading terms are found against an explicit
/// MonomialOrder, never against the storage order.
struct Polynomial {
    std::map<Exps, Sqrt2Rat> terms;

    bool is_zero() const { return terms.empty(); }

    void add_term(const Exps& e, const Sqrt2Rat& c) {
        auto it = terms.find(e);
        if (it == terms.end()) {
            if (!c.is_zero()) terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    friend Polynomial operator+(const Polynomial& x, const Polynomial& y) {
        Polynomial r = x;
        for (const auto& [e, c] : y.terms) r.add_term(e, c);
        return r;
    }
    friend Polynomial operator-(const Polynomial& x, const Polynomial& y) {
        Polynomial r = x;
        for (const auto& [e, c] : y.terms) r.add_term(e, -c);
        return r;
    }
    friend Polynomial operator*(const Sqrt2Rat& s, const Polynomial& x) {
        Polynomial r;
        for (const auto& [e, c] : x.terms) r.add_term(e, s * c);
        return r;
    }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// multiply by the monomial coeff * x^e
    Polynomial times_monomial(const Exps& e, const Sqrt2Rat& coeff) const {
        Polynomial r;
        for (const auto& [m, c] : terms) r.terms.emplace(exps_mul(m, e), coeff * c);
        return r;
    }

    static Polynomial monomial(const Exps& e, Sqrt2Rat c = Sqrt2Rat(1)) {
        Polynomial p;
        p.add_term(e, c);
        return p;
    }

    /// check homogeneity in both gradings; returns (multidegree, weight)
    std::pair<std::vector<int>, Weight> homogeneous_bidegree(const VariableSet& vs) const {
        if (terms.empty()) throw std::domain_error("zero polynomial has no bidegree");
        auto it = terms.begin();
        auto deg = vs.multidegree(it->first);
        auto wt = vs.weight(it->first);
        for (++it; it != terms.end(); ++it) {
            if (vs.multidegree(it->first) != deg || !(vs.weight(it->first) == wt))
                throw std::domain_error("polynomial is not bihomogeneous");
        }
        return {deg, wt};
    }

    std::string str(const VariableSet& vs) const {
        if (terms.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")*" + vs.monomial_str(e);
        }
        return s;
    }
};

/// Lexicographic order along an explicit variable sequence (a permutation of
/// the ambient variables).  The paper's orders are all of this kind.
struct MonomialOrder {
    std::vector<int> seq;  // seq[0] is the greatest variable

    MonomialOrder() = default;
    explicit MonomialOrder(std::vector<int> s) : seq(std::move(s)) {}

    static MonomialOrder from_names(const VariableSet& vs, const std::vector<std::string>& names) {
        if (names.size() != vs.size())
            throw std::invalid_argument("order must list every variable exactly once");
        std::vector<int> s;
        std::vector<bool> seen(vs.size(), false);
        for (const auto& n : names) {
            int i = vs.index_of(n);
            if (seen[i]) throw std::invalid_argument("order lists variable twice: " + n);
            seen[i] = true;
            s.push_back(i);
        }
        return MonomialOrder(std::move(s));
    }

    /// -1, 0, +1 as a <, ==, > b
    int compare(const Exps& a, const Exps& b) const {
        if (a.size() != b.size() || a.size() != seq.size())
            throw std::domain_error("monomial order: dimension mismatch");
        for (int i : seq) {
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
    }
    bool greater(const Exps& a, const Exps& b) const { return compare(a, b) > 0; }

    /// order extended to previously-appended auxiliary variables: the
    /// auxiliaries rank below every original variable, in introduction order
    MonomialOrder extended(std::size_t new_size) const {
        MonomialOrder r = *this;
        for (std::size_t i = seq.size(); i < new_size; ++i) r.seq.push_back((int)i);
        return r;
    }
};

/// A monomial ideal held by its minimal generating set.
struct MonomialIdeal {
    std::vector<Exps> gens;  // minimal: no generator divides another

    static MonomialIdeal from_generators(std::vector<Exps> raw) {
        MonomialIdeal id;
        std::sort(raw.begin(), raw.end());
        raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
        for (const auto& m : raw) {
            bool redundant = false;
            for (const auto& o : raw)
                if (o != m && exps_divides(o, m)) { redundant = true; break; }
            if (!redundant) id.gens.push_back(m);
        }
        return id;
    }

    bool contains(const Exps& m) const {
        for (const auto& gen : gens)
            if (exps_divides(gen, m)) return true;
        return false;
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
};

} // namespace qflag
