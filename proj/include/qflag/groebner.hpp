#pragma once

#include "qflag/polynomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qflag {

inline std::pair<Exps, Sqrt2Rat> leading_term(const Polynomial& p, const MonomialOrder& ord) {
    if (p.is_zero()) throw std::domain_error("leading term of zero polynomial");
    auto best = p.terms.begin();
    for (auto it = std::next(p.terms.begin()); it != p.terms.end(); ++it)
        if (ord.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

/// Full normal form: every term of the remainder is reducible by no basis
/// leading term.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                              const MonomialOrder& ord) {
    std::vector<std::pair<Exps, Sqrt2Rat>> lts;
    lts.reserve(basis.size());
    for (const auto& b : basis) lts.push_back(leading_term(b, ord));

    Polynomial rem;
    Polynomial work = f;
    while (!work.is_zero()) {
        auto [m, c] = leading_term(work, ord);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (exps_divides(lts[i].first, m)) {
                Exps shift = exps_sub(m, lts[i].first);
                work = work - basis[i].times_monomial(shift, c / lts[i].second);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(m, c);
            work.terms.erase(m);
        }
    }
    return rem;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    auto [mf, cf] = leading_term(f, ord);
    auto [mg, cg] = leading_term(g, ord);
    Exps l = exps_lcm(mf, mg);
    return f.times_monomial(exps_sub(l, mf), cf.inverse()) -
           g.times_monomial(exps_sub(l, mg), cg.inverse());
}

/// Buchberger with the product and chain criteria and the normal selection
/// strategy (pairs by order-smallest lcm).  Returns the reduced Groebner
/// basis: monic, fully inter-reduced, sorted by decreasing leading monomial.
inline std::vector<Polynomial> buchberger(std::vector<Polynomial> gens, const MonomialOrder& ord,
                                          std::size_t pair_limit = 200000) {
    std::vector<Polynomial> basis;
    for (auto& p : gens)
        if (!p.is_zero()) basis.push_back(std::move(p));
    if (basis.empty()) return {};

    auto lt = [&](std::size_t i) { return leading_term(basis[i], ord).first; };

    struct Pair {
        Exps lcm;
        std::size_t i, j;
    };
    std::vector<Pair> queue;
    std::set<std::pair<std::size_t, std::size_t>> handled;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) queue.push_back({exps_lcm(lt(i), lt(j)), i, j});
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    std::size_t processed = 0;
    while (!queue.empty()) {
        if (++processed > pair_limit)
            throw std::runtime_error("buchberger: pair queue limit exceeded");
        // normal strategy: smallest lcm in the order; ties by index
        std::size_t best = 0;
        for (std::size_t k = 1; k < queue.size(); ++k) {
            int c = ord.compare(queue[k].lcm, queue[best].lcm);
            if (c < 0 || (c == 0 && std::make_pair(queue[k].i, queue[k].j) <
                                         std::make_pair(queue[best].i, queue[best].j)))
                best = k;
        }
        Pair pr = queue[best];
        queue.erase(queue.begin() + best);
        handled.insert({pr.i, pr.j});

        Exps li = lt(pr.i), lj = lt(pr.j);
        // product criterion: coprime leading monomials
        if (exps_lcm(li, lj) == exps_mul(li, lj)) continue;
        // chain criterion
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!exps_divides(lt(k), pr.lcm)) continue;
            auto key = [&](std::size_t a, std::size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (handled.count(key(pr.i, k)) && handled.count(key(k, pr.j))) chained = true;
        }
        if (chained) continue;

        Polynomial r = normal_form(s_polynomial(basis[pr.i], basis[pr.j], ord), basis, ord);
        if (!r.is_zero()) {
            basis.push_back(std::move(r));
            push_pairs_for(basis.size() - 1);
        }
    }

    // minimalize: drop elements whose LT is divisible by another LT
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Exps mi = lt(i);
        bool drop = false;
        for (std::size_t j = 0; j < basis.size() && !drop; ++j) {
            if (i == j) continue;
            Exps mj = leading_term(basis[j], ord).first;
            if (exps_divides(mj, mi) && (mj != mi || j < i)) drop = true;
        }
        if (!drop) minimal.push_back(basis[i]);
    }

    // reduce tails and normalize to monic
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = others.empty() ? minimal[i] : normal_form(minimal[i], others, ord);
        auto [m, c] = leading_term(r, ord);
        reduced.push_back(c.inverse() * r);
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.greater(leading_term(a, ord).first, leading_term(b, ord).first);
    });
    return reduced;
}

/// Minimal generating set of <LT(I)> read off a Groebner basis.
inline MonomialIdeal lt_ideal(const std::vector<Polynomial>& gb, const MonomialOrder& ord) {
    std::vector<Exps> lts;
    lts.reserve(gb.size());
    for (const auto& p : gb) lts.push_back(leading_term(p, ord).first);
    return MonomialIdeal::from_generators(std::move(lts));
}

} // namespace qflag
