#pragma once

#include "qflag/lie.hpp"
#include "qflag/qseries.hpp"
#include "qflag/rational.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace qflag {

/// The symmetric kernel
///   Phi_ab^{ij} = 2(alpha_i, alpha_j) / (alpha_i^2 alpha_j^2)
///                 * min(a alpha_i^2, b alpha_j^2).
inline Rat phi(const LieAlgebra& g, int i, int j, long a, long b) {
    if (i < 0 || i >= g.rank || j < 0 || j >= g.rank)
        throw std::invalid_argument("phi: root index out of range");
    if (a < 1 || b < 1) throw std::invalid_argument("phi: row lengths start at 1");
    Rat aij = g.pairing(g.simple_roots[i], g.simple_roots[j]);
    if (aij == 0) return 0;
    Rat ai2 = g.root_norm2[i], aj2 = g.root_norm2[j];
    Rat m = std::min(Rat(a) * ai2, Rat(b) * aj2);
    return 2 * aij / (ai2 * aj2) * m;
}

namespace detail {

/// A configuration: for each simple root i, the multiplicities m_a^{(i)}
/// stored as occupied rows (a, m) with m > 0.
using Config = std::vector<std::vector<std::pair<long, long>>>;

inline void partitions_of(long n, const std::function<void(const std::vector<std::pair<long, long>>&)>& visit) {
    // partitions of n as multiplicity lists [(part, count)], parts descending
    std::vector<std::pair<long, long>> cur;
    std::function<void(long, long)> rec = [&](long rem, long maxpart) {
        if (rem == 0) {
            visit(cur);
            return;
        }
        for (long p = std::min(rem, maxpart); p >= 1; --p) {
            for (long c = rem / p; c >= 1; --c) {
                cur.emplace_back(p, c);
                rec(rem - p * c, p - 1);
                cur.pop_back();
            }
        }
    };
    rec(n, n);
}

} // namespace detail

/// The fermionic polynomial M_{lambda mu}(q) of the pair (lambda, mu):
/// sum over configurations {m_a^{(i)}} with
///     mu - lambda = sum_i (sum_a a m_a^{(i)}) alpha_i
/// of  q^{cocharge(m)} prod_{i,a} qbinom(P_a^{(i)} + m_a^{(i)}, m_a^{(i)}),
/// with vacancy numbers P_a^{(i)} = (mu, alpha_i^vee) - sum Phi m.
/// Negative vacancy annihilates a configuration through the qbinom
/// convention; cocharges must come out nonnegative integers, which is
/// asserted on every configuration rather than assumed.
inline QPolynomial fermionic_poly(const LieAlgebra& g, const Weight& lam_small,
                                  const Weight& mu_big) {
    if (!lam_small.is_dominant() || !mu_big.is_dominant())
        throw std::domain_error("fermionic_poly: weights must be dominant");
    auto coeffs = g.root_coefficients(mu_big - lam_small);
    std::vector<long> n(g.rank);
    for (int i = 0; i < g.rank; ++i) {
        if (coeffs[i] < 0 || !is_integer(coeffs[i])) return {};  // no configurations
        n[i] = (long)to_int(coeffs[i]);
    }

    QPolynomial total;
    detail::Config cfg(g.rank);
    std::function<void(int)> rec = [&](int i) {
        if (i == g.rank) {
            // cocharge
            Rat cc = 0;
            for (int i1 = 0; i1 < g.rank; ++i1)
                for (auto [a, ma] : cfg[i1])
                    for (int j1 = 0; j1 < g.rank; ++j1)
                        for (auto [b, mb] : cfg[j1]) cc += Rat(ma) * mb * phi(g, i1, j1, a, b);
            cc /= 2;
            if (!is_integer(cc) || cc < 0)
                throw std::runtime_error("fermionic_poly: cocharge " + std::string(cc.str()) +
                                         " is not a nonnegative integer");
            long cch = (long)to_int(cc);

            // vacancy-number factors, up to the row length where Phi saturates
            QPolynomial term = QPolynomial::one();
            for (int i1 = 0; i1 < g.rank && !term.is_zero(); ++i1) {
                long amax = 1;
                for (int j1 = 0; j1 < g.rank; ++j1)
                    for (auto [b, mb] : cfg[j1]) {
                        Rat bound = Rat(b) * g.root_norm2[j1] / g.root_norm2[i1];
                        Int ab = (numerator(bound) + denominator(bound) - 1) / denominator(bound);
                        amax = std::max(amax, (long)ab);
                    }
                for (long a = 1; a <= amax && !term.is_zero(); ++a) {
                    Rat p = mu_big.d[i1];
                    long ma = 0;
                    for (int j1 = 0; j1 < g.rank; ++j1)
                        for (auto [b, mb] : cfg[j1]) p -= phi(g, i1, j1, a, b) * mb;
                    for (auto [aa, mm] : cfg[i1])
                        if (aa == a) ma = mm;
                    if (!is_integer(p))
                        throw std::runtime_error("fermionic_poly: non-integer vacancy number");
                    term = term * qbinom((long)to_int(p) + ma, ma);
                }
            }
            if (!term.is_zero()) total = total + term.shifted(cch);
            return;
        }
        if (n[i] == 0) {
            cfg[i].clear();
            rec(i + 1);
            return;
        }
        detail::partitions_of(n[i], [&](const std::vector<std::pair<long, long>>& part) {
            cfg[i] = part;
            rec(i + 1);
            cfg[i].clear();
        });
    };
    rec(0);
    return total;
}

/// The modified Hall-Littlewood data of a dominant weight lambda: the map
/// mu -> M_{mu lambda}(q) over dominant mu with lambda - mu in the
/// nonnegative root lattice, zero entries omitted.  The character-valued
/// polynomial itself is sum_mu M_{mu lambda}(q) chi_mu.
inline std::map<Weight, QPolynomial> modified_hl(const LieAlgebra& g, const Weight& lambda) {
    if (!lambda.is_dominant()) throw std::domain_error("modified_hl: weight must be dominant");
    auto cm = g.root_coefficients(lambda);
    std::vector<long> cmax(g.rank);
    for (int i = 0; i < g.rank; ++i) {
        // dominant mu have nonnegative root coordinates, so c_i <= floor(n_i(lambda));
        // the n_i are >= 0 for dominant lambda, making truncation a floor
        cmax[i] = (long)(Int(numerator(cm[i]) / denominator(cm[i])));
    }
    std::vector<Weight> alpha_dyn;
    for (int i = 0; i < g.rank; ++i) alpha_dyn.push_back(g.dynkin(g.simple_roots[i]));

    std::map<Weight, QPolynomial> out;
    std::vector<long> c(g.rank, 0);
    while (true) {
        Weight mu = lambda;
        for (int i = 0; i < g.rank; ++i)
            if (c[i]) mu = mu - (int)c[i] * alpha_dyn[i];
        if (mu.is_dominant()) {
            QPolynomial p = fermionic_poly(g, mu, lambda);
            if (!p.is_zero()) out.emplace(mu, std::move(p));
        }
        int k = g.rank - 1;
        while (k >= 0 && c[k] == cmax[k]) c[k--] = 0;
        if (k < 0) break;
        ++c[k];
    }
    return out;
}

/// Assemble the modified Hall-Littlewood polynomial as a character with
/// q-series coefficients, truncated at order N.
inline CharacterQSeries modified_hl_character(const LieAlgebra& g, const Weight& lambda, long N) {
    CharacterQSeries out(N);
    for (const auto& [mu, poly] : modified_hl(g, lambda)) {
        Character chi = irreducible_character(g, mu);
        for (const auto& [w, m] : chi.mult) out.add(w, m * to_series(poly, N));
    }
    return out;
}

} // namespace qflag
