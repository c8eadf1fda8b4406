#pragma once

#include "qflag/groebner.hpp"
#include "qflag/lie.hpp"
#include "qflag/polynomial.hpp"
#include "qflag/qseries.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qflag {

/// A quadratic monomial model: graded variables (originals followed by the
/// auxiliaries that quadratization introduced) and the set P of unordered
/// pairs {a,b} of distinct variables, one per quadratic generator.  This is
/// the data the Hilbert series formula consumes:
///
///   h(M;q) = sum over { m : sum_a m_a deg_a = M }
///            q^{Q(m)} e^{sum_a m_a wt_a} / prod_a (q)_{m_a},
///   Q(m)   = sum_{{a,b} in P} m_a m_b.
struct QuadraticModel {
    VariableSet vars;
    std::vector<std::pair<int, int>> pairs;  // indices a < b, always distinct

    struct AuxDef {
        int index;      // position in vars
        Exps monomial;  // defining monomial over the original variables
    };
    std::vector<AuxDef> aux;

    std::size_t original_count() const { return vars.size() - aux.size(); }
};

/// Build a model from an already-quadratic monomial ideal.  Square
/// generators x_a^2 are rejected: the paper's models contain none, and the
/// composition formula above has no verified convention for them.
inline QuadraticModel model_from_quadratic_ideal(VariableSet vars, const MonomialIdeal& ideal,
                                                 std::vector<QuadraticModel::AuxDef> aux = {}) {
    QuadraticModel model;
    model.vars = std::move(vars);
    model.aux = std::move(aux);
    for (const auto& gen : ideal.gens) {
        if (exps_total(gen) != 2)
            throw std::domain_error("model: ideal is not quadratic (generator " +
                                    model.vars.monomial_str(gen) + ")");
        int a = -1, b = -1;
        for (std::size_t i = 0; i < gen.size(); ++i) {
            if (gen[i] == 1) (a < 0 ? a : b) = (int)i;
            else if (gen[i] == 2)
                throw std::domain_error("model: square generator " + model.vars.monomial_str(gen) +
                                        " is not supported");
        }
        model.pairs.emplace_back(a, b);
    }
    std::sort(model.pairs.begin(), model.pairs.end());
    model.pairs.erase(std::unique(model.pairs.begin(), model.pairs.end()), model.pairs.end());
    return model;
}

namespace detail {

/// One quadratization round: adjoin auxiliaries for `substitutions`
/// (name, defining monomial over current vars), extend the order below all
/// current variables, run Buchberger on {ideal monomials} + {t - monomial},
/// and return the new leading-term ideal together with the extended data.
struct QuadratizeState {
    VariableSet vars;
    MonomialOrder order;
    MonomialIdeal ideal;
    std::vector<QuadraticModel::AuxDef> aux;
};

inline void adjoin_aux(QuadratizeState& st, const std::string& name, Exps monomial) {
    monomial.resize(st.vars.size(), 0);  // tolerate vectors sized before earlier adjoins
    GradedVariable t;
    t.name = name;
    t.degree.assign(st.vars.grading_length(), 0);
    t.weight = Weight::zero(st.vars.vars[0].weight.rank());
    for (std::size_t i = 0; i < monomial.size(); ++i) {
        if (!monomial[i]) continue;
        for (std::size_t k = 0; k < t.degree.size(); ++k)
            t.degree[k] += monomial[i] * st.vars.vars[i].degree[k];
        t.weight = t.weight + monomial[i] * st.vars.vars[i].weight;
    }
    // widen every stored exponent vector by one slot
    for (auto& gexp : st.ideal.gens) gexp.push_back(0);
    for (auto& a : st.aux) a.monomial.push_back(0);
    monomial.push_back(0);
    QuadraticModel::AuxDef def;
    def.monomial = std::move(monomial);
    st.vars.vars.push_back(std::move(t));
    def.index = (int)st.vars.size() - 1;
    st.aux.push_back(std::move(def));
    st.order = st.order.extended(st.vars.size());
}

inline void recompute_lt(QuadratizeState& st) {
    std::vector<Polynomial> gens;
    for (const auto& gexp : st.ideal.gens) gens.push_back(Polynomial::monomial(gexp));
    for (const auto& a : st.aux) {
        Exps te(st.vars.size(), 0);
        te[a.index] = 1;
        gens.push_back(Polynomial::monomial(te) - Polynomial::monomial(a.monomial));
    }
    auto gb = buchberger(std::move(gens), st.order);
    st.ideal = lt_ideal(gb, st.order);
}

} // namespace detail

/// Quadratize a monomial ideal by auxiliary variables.
///
/// With explicit substitutions (the paper's hand choices) the procedure is a
/// single round: adjoin the auxiliaries, extend the order below all original
/// variables, and take leading terms of the extended ideal.  Without
/// substitutions a greedy heuristic factors each non-quadratic generator by
/// pairing its two order-largest variables, repeating until quadratic.
inline QuadraticModel quadratize(
    const VariableSet& vars, const MonomialIdeal& ideal, const MonomialOrder& order,
    const std::optional<std::vector<std::pair<std::string, Exps>>>& substitutions = std::nullopt,
    int max_aux = 32) {
    detail::QuadratizeState st{vars, order, ideal, {}};

    if (substitutions) {
        for (const auto& [name, mon] : *substitutions) {
            if (exps_total(mon) < 2)
                throw std::invalid_argument("substitution " + name + " must be a degree >= 2 monomial");
            Exps m = mon;
            m.resize(st.vars.size(), 0);  // allow references to earlier auxiliaries
            detail::adjoin_aux(st, name, m);
        }
        detail::recompute_lt(st);
    } else {
        detail::recompute_lt(st);  // canonical minimal generators first
    }

    while (true) {
        bool quadratic = true;
        for (const auto& gexp : st.ideal.gens)
            if (exps_total(gexp) > 2) quadratic = false;
        if (quadratic) break;
        if (substitutions || (int)st.aux.size() >= max_aux) {
            std::string culprit;
            for (const auto& gexp : st.ideal.gens)
                if (exps_total(gexp) > 2) { culprit = st.vars.monomial_str(gexp); break; }
            throw std::runtime_error("quadratization failed: non-quadratic generator " + culprit +
                                     " remains after " + std::to_string(st.aux.size()) +
                                     " auxiliary variables");
        }
        // greedy: factor the two order-largest variables of each offender
        std::vector<Exps> wanted;
        for (const auto& gexp : st.ideal.gens) {
            if (exps_total(gexp) <= 2) continue;
            std::vector<int> present;
            for (int i : st.order.seq) {
                for (int k = 0; k < gexp[i]; ++k) present.push_back(i);
                if (present.size() >= 2) break;
            }
            Exps m(st.vars.size(), 0);
            m[present[0]] += 1;
            m[present[1]] += 1;
            wanted.push_back(std::move(m));
        }
        std::sort(wanted.begin(), wanted.end());
        wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
        for (const auto& m : wanted) {
            bool known = false;
            for (const auto& a : st.aux) {
                Exps am = a.monomial, mm = m;
                am.resize(st.vars.size(), 0);
                mm.resize(st.vars.size(), 0);
                if (am == mm) known = true;
            }
            if (!known) detail::adjoin_aux(st, "t" + std::to_string(st.aux.size() + 1), m);
        }
        detail::recompute_lt(st);
    }

    // expand auxiliary definitions to original variables (aux may reference aux)
    std::vector<QuadraticModel::AuxDef> flat = st.aux;
    for (auto& a : flat) {
        Exps e = a.monomial;
        e.resize(st.vars.size(), 0);
        bool again = true;
        while (again) {
            again = false;
            for (const auto& b : st.aux) {
                if (e[b.index] > 0) {
                    int k = e[b.index];
                    e[b.index] = 0;
                    Exps bm = b.monomial;
                    bm.resize(st.vars.size(), 0);
                    for (std::size_t i = 0; i < e.size(); ++i) e[i] += k * bm[i];
                    again = true;
                }
            }
        }
        a.monomial = std::move(e);
    }
    return model_from_quadratic_ideal(st.vars, st.ideal, std::move(flat));
}

// ---------------------------------------------------------------------------
// Composition enumeration and Hilbert series
// ---------------------------------------------------------------------------

/// Visit every assignment m (one multiplicity per variable) with
/// sum_a m_a * degree_a = M, in lexicographic order of m.
inline void enumerate_compositions(const VariableSet& vars, const std::vector<int>& M,
                                   const std::function<void(const std::vector<int>&)>& visit) {
    const std::size_t n = vars.size();
    const std::size_t l = M.size();
    if (vars.grading_length() != l) throw std::invalid_argument("multidegree length mismatch");
    for (int x : M)
        if (x < 0) return;

    // suffix support: which degree slots the variables from position k on can reach
    std::vector<std::vector<bool>> suffix(n + 1, std::vector<bool>(l, false));
    for (int k = (int)n - 1; k >= 0; --k) {
        suffix[k] = suffix[k + 1];
        for (std::size_t t = 0; t < l; ++t)
            if (vars.vars[k].degree[t] > 0) suffix[k][t] = true;
    }

    std::vector<int> m(n, 0), rem = M;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == n) {
            for (int x : rem)
                if (x != 0) return;
            visit(m);
            return;
        }
        for (std::size_t t = 0; t < l; ++t)
            if (rem[t] > 0 && !suffix[k][t]) return;  // unreachable remainder
        const auto& d = vars.vars[k].degree;
        int cap = -1;
        for (std::size_t t = 0; t < l; ++t)
            if (d[t] > 0) {
                int c = rem[t] / d[t];
                cap = (cap < 0) ? c : std::min(cap, c);
            }
        if (cap < 0) cap = 0;  // degree-zero variables cannot occur (invariant)
        for (int v = 0; v <= cap; ++v) {
            if (v > 0)
                for (std::size_t t = 0; t < l; ++t) rem[t] -= d[t];
            m[k] = v;
            rec(k + 1);
        }
        for (std::size_t t = 0; t < l; ++t) rem[t] += cap * d[t];
        m[k] = 0;
    };
    rec(0);
}

inline std::vector<std::vector<int>> compositions(const VariableSet& vars, const std::vector<int>& M) {
    std::vector<std::vector<int>> out;
    enumerate_compositions(vars, M, [&](const std::vector<int>& m) { out.push_back(m); });
    return out;
}

/// The character-valued Hilbert series of the affinized variety attached to
/// a quadratic monomial model, truncated at q^N.
inline CharacterQSeries hilbert_affinized(const QuadraticModel& model, const std::vector<int>& M,
                                          long N) {
    if (N < 0) throw std::invalid_argument("truncation order must be >= 0");
    const std::size_t rank = model.vars.vars.empty() ? M.size() : model.vars.vars[0].weight.rank();
    CharacterQSeries h(N);
    enumerate_compositions(model.vars, M, [&](const std::vector<int>& m) {
        long Q = 0;
        for (const auto& [a, b] : model.pairs) Q += (long)m[a] * m[b];
        if (Q > N) return;  // q^Q e^w (1 + ...) has no coefficient <= N
        QSeries s = QSeries::one(N);
        Weight w = Weight::zero(rank);
        for (std::size_t a = 0; a < m.size(); ++a) {
            if (!m[a]) continue;
            s = s * inv_poch(m[a], N);
            w = w + m[a] * model.vars.vars[a].weight;
        }
        h.add(w, s.shifted(Q));
    });
    return h;
}

/// Variables of the free polynomial ring on the chosen fundamental
/// representations; multidegrees are unit vectors in the full rank-length
/// grading (slots for unused fundamentals stay zero).
inline VariableSet free_variables(const LieAlgebra& g, const std::vector<int>& reps) {
    VariableSet vs;
    for (int r : reps) {
        for (const auto& [name, w] : rep_weights(g, r)) {
            GradedVariable v;
            v.name = name;
            v.degree.assign(g.rank, 0);
            v.degree[r - 1] = 1;
            v.weight = w;
            vs.vars.push_back(std::move(v));
        }
    }
    return vs;
}

/// Hilbert series of the affinized free ring: the model with no pairs.
inline CharacterQSeries hilbert_free_affinized(const LieAlgebra& g, const std::vector<int>& reps,
                                               const std::vector<int>& M, long N) {
    for (int x : M)
        if (x < 0) return CharacterQSeries(N);  // empty
    QuadraticModel model;
    model.vars = free_variables(g, reps);
    return hilbert_affinized(model, M, N);
}

/// Finite (classical) Hilbert function of the free ring: the multiset of
/// weights sum m_a lambda_a over compositions of M.
inline Character hilbert_free_finite(const LieAlgebra& g, const std::vector<int>& reps,
                                     const std::vector<int>& M) {
    Character ch;
    for (int x : M)
        if (x < 0) return ch;
    VariableSet vs = free_variables(g, reps);
    enumerate_compositions(vs, M, [&](const std::vector<int>& m) {
        Weight w = Weight::zero(g.rank);
        for (std::size_t a = 0; a < m.size(); ++a)
            if (m[a]) w = w + m[a] * vs.vars[a].weight;
        ch.add(w, 1);
    });
    return ch;
}

} // namespace qflag
