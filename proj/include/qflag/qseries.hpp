#pragma once

#include "qflag/rational.hpp"
#include "qflag/weight.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qflag {

// ---------------------------------------------------------------------------
// QPolynomial: an exact polynomial in q with integer coefficients.
// QSeries: a truncated power series, coefficients valid through q^N.
// The two are kept distinct so that q = 1 specialization is only ever applied
// to exact polynomials.
// ---------------------------------------------------------------------------

struct QPolynomial {
    std::vector<Int> c;  // c[k] = coefficient of q^k, trailing zeros trimmed

    QPolynomial() = default;
    explicit QPolynomial(std::vector<Int> v) : c(std::move(v)) { trim(); }

    static QPolynomial one() { return QPolynomial({Int(1)}); }
    static QPolynomial monomial(long k, Int coeff = 1) {
        std::vector<Int> v(k + 1, Int(0));
        v[k] = std::move(coeff);
        return QPolynomial(std::move(v));
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }  // -1 for 0
    Int coeff(long k) const { return (k >= 0 && k < (long)c.size()) ? c[k] : Int(0); }

    friend QPolynomial operator+(const QPolynomial& x, const QPolynomial& y) {
        std::vector<Int> v(std::max(x.c.size(), y.c.size()), Int(0));
        for (std::size_t i = 0; i < x.c.size(); ++i) v[i] += x.c[i];
        for (std::size_t i = 0; i < y.c.size(); ++i) v[i] += y.c[i];
        return QPolynomial(std::move(v));
    }
    friend QPolynomial operator-(const QPolynomial& x, const QPolynomial& y) {
        std::vector<Int> v(std::max(x.c.size(), y.c.size()), Int(0));
        for (std::size_t i = 0; i < x.c.size(); ++i) v[i] += x.c[i];
        for (std::size_t i = 0; i < y.c.size(); ++i) v[i] -= y.c[i];
        return QPolynomial(std::move(v));
    }
    friend QPolynomial operator*(const QPolynomial& x, const QPolynomial& y) {
        if (x.is_zero() || y.is_zero()) return {};
        std::vector<Int> v(x.c.size() + y.c.size() - 1, Int(0));
        for (std::size_t i = 0; i < x.c.size(); ++i)
            for (std::size_t j = 0; j < y.c.size(); ++j)
                v[i + j] += x.c[i] * y.c[j];
        return QPolynomial(std::move(v));
    }
    friend QPolynomial operator*(const Int& s, const QPolynomial& x) {
        QPolynomial r = x;
        for (auto& v : r.c) v *= s;
        r.trim();
        return r;
    }
    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

    /// q^k * this
    QPolynomial shifted(long k) const {
        if (is_zero()) return {};
        std::vector<Int> v(c.size() + k, Int(0));
        for (std::size_t i = 0; i < c.size(); ++i) v[i + k] = c[i];
        return QPolynomial(std::move(v));
    }

    /// Specialization at q = 1.  Only meaningful for exact polynomials;
    /// truncated series refuse this operation (see QSeries).
    Int at_one() const {
        Int s = 0;
        for (const auto& v : c) s += v;
        return s;
    }

    std::string str() const;
};

struct QSeries {
    std::vector<Int> c;  // exactly order+1 entries, valid through q^order

    QSeries() = default;
    QSeries(std::vector<Int> v, long order) : c(std::move(v)) { c.resize(order + 1, Int(0)); }
    explicit QSeries(long order) : c(order + 1, Int(0)) {}

    long order() const { return static_cast<long>(c.size()) - 1; }
    Int coeff(long k) const { return (k >= 0 && k < (long)c.size()) ? c[k] : Int(0); }
    bool is_zero() const {
        for (const auto& v : c) if (v != 0) return false;
        return true;
    }

    static QSeries one(long order) {
        QSeries s(order);
        s.c[0] = 1;
        return s;
    }

    QSeries truncated(long order) const {
        if (order > this->order())
            throw std::domain_error("cannot extend a truncated series");
        return QSeries(std::vector<Int>(c.begin(), c.begin() + order + 1), order);
    }

    friend QSeries operator+(const QSeries& x, const QSeries& y) {
        long n = std::min(x.order(), y.order());
        QSeries r(n);
        for (long k = 0; k <= n; ++k) r.c[k] = x.c[k] + y.c[k];
        return r;
    }
    friend QSeries operator-(const QSeries& x, const QSeries& y) {
        long n = std::min(x.order(), y.order());
        QSeries r(n);
        for (long k = 0; k <= n; ++k) r.c[k] = x.c[k] - y.c[k];
        return r;
    }
    friend QSeries operator*(const QSeries& x, const QSeries& y) {
        long n = std::min(x.order(), y.order());
        QSeries r(n);
        for (long i = 0; i <= n; ++i) {
            if (x.c[i] == 0) continue;
            for (long j = 0; i + j <= n; ++j)
                if (y.c[j] != 0) r.c[i + j] += x.c[i] * y.c[j];
        }
        return r;
    }
    friend QSeries operator*(const Int& s, const QSeries& x) {
        QSeries r = x;
        for (auto& v : r.c) v *= s;
        return r;
    }
    friend QSeries operator*(const QPolynomial& p, const QSeries& x) {
        QSeries r(x.order());
        for (long i = 0; i <= std::min<long>(p.degree(), x.order()); ++i) {
            if (p.c[i] == 0) continue;
            for (long j = 0; i + j <= x.order(); ++j)
                if (x.c[j] != 0) r.c[i + j] += p.c[i] * x.c[j];
        }
        return r;
    }

    /// q^k * this (coefficients beyond the order are dropped, order is kept)
    QSeries shifted(long k) const {
        QSeries r(order());
        for (long j = 0; j + k <= order(); ++j) r.c[j + k] = c[j];
        return r;
    }

    /// Equality demands matching truncation orders; comparing series of
    /// different orders is a usage bug, not a value question.
    friend bool operator==(const QSeries& x, const QSeries& y) {
        if (x.order() != y.order())
            throw std::domain_error("comparing q-series of different truncation orders");
        return x.c == y.c;
    }

    std::string str() const;
};

inline QSeries to_series(const QPolynomial& p, long order) {
    QSeries s(order);
    for (long k = 0; k <= std::min(p.degree(), order); ++k) s.c[k] = p.c[k];
    return s;
}

// ---------------------------------------------------------------------------
// q-Pochhammer symbols and Gaussian binomials
// ---------------------------------------------------------------------------

/// (q)_m = prod_{k=1..m} (1 - q^k), as an exact polynomial.
inline QPolynomial poch(long m) {
    if (m < 0) throw std::domain_error("poch: negative subscript");
    QPolynomial r = QPolynomial::one();
    for (long k = 1; k <= m; ++k) {
        QPolynomial f({Int(1)});
        f.c.resize(k + 1, Int(0));
        f.c[k] = -1;
        r = r * f;
    }
    return r;
}

/// Truncated inverse 1/(q)_m: the series S with poch(m)*S == 1 mod q^{N+1}.
/// Expanded as a product of geometric series 1/(1-q^k).
inline QSeries inv_poch(long m, long order) {
    if (m < 0) throw std::domain_error("inv_poch: negative subscript");
    QSeries r = QSeries::one(order);
    for (long k = 1; k <= m; ++k) {
        if (k > order) break;  // 1/(1-q^k) == 1 mod q^{order+1}
        QSeries geo(order);
        for (long j = 0; j * k <= order; ++j) geo.c[j * k] = 1;
        r = r * geo;
    }
    return r;
}

/// Gaussian binomial [top, bottom]_q.  Total function: zero polynomial
/// whenever bottom < 0 or top < bottom; this is exactly the convention that
/// makes negative vacancy numbers annihilate a fermionic configuration.
inline QPolynomial qbinom(long top, long bottom) {
    if (bottom < 0 || top < bottom) return {};
    if (bottom == 0 || bottom == top) return QPolynomial::one();
    // [n,k] = [n-1,k-1] + q^k [n-1,k], row by row
    std::vector<QPolynomial> row(bottom + 1);
    row[0] = QPolynomial::one();
    for (long n = 1; n <= top; ++n) {
        for (long k = std::min(n, bottom); k >= 1; --k) {
            QPolynomial v = row[k - 1];
            if (k < n) v = v + row[k].shifted(k);
            row[k] = std::move(v);
        }
    }
    return row[bottom];
}

// ---------------------------------------------------------------------------
// CharacterQSeries: a formal character with q-series coefficients, the value
// type of every Hilbert series here.  All entries share one truncation order.
// ---------------------------------------------------------------------------

struct CharacterQSeries {
    long order = 0;
    std::map<Weight, QSeries> entries;  // no identically-zero entries stored

    CharacterQSeries() = default;
    explicit CharacterQSeries(long n) : order(n) {}

    static CharacterQSeries one(long order, std::size_t rank) {
        CharacterQSeries r(order);
        r.entries[Weight::zero(rank)] = QSeries::one(order);
        return r;
    }

    void add(const Weight& w, const QSeries& s) {
        if (s.order() != order) throw std::domain_error("CharacterQSeries: order mismatch");
        auto it = entries.find(w);
        if (it == entries.end()) {
            if (!s.is_zero()) entries.emplace(w, s);
        } else {
            it->second = it->second + s;
            if (it->second.is_zero()) entries.erase(it);
        }
    }

    friend CharacterQSeries operator+(const CharacterQSeries& x, const CharacterQSeries& y) {
        if (x.order != y.order) throw std::domain_error("CharacterQSeries: order mismatch");
        CharacterQSeries r = x;
        for (const auto& [w, s] : y.entries) r.add(w, s);
        return r;
    }
    friend CharacterQSeries operator-(const CharacterQSeries& x, const CharacterQSeries& y) {
        if (x.order != y.order) throw std::domain_error("CharacterQSeries: order mismatch");
        CharacterQSeries r = x;
        for (const auto& [w, s] : y.entries) r.add(w, Int(-1) * s);
        return r;
    }
    /// scalar q-series multiplies every entry
    friend CharacterQSeries operator*(const QSeries& s, const CharacterQSeries& x) {
        CharacterQSeries r(x.order);
        for (const auto& [w, e] : x.entries) r.add(w, s * e);
        return r;
    }
    friend CharacterQSeries operator*(const QPolynomial& p, const CharacterQSeries& x) {
        CharacterQSeries r(x.order);
        for (const auto& [w, e] : x.entries) r.add(w, p * e);
        return r;
    }

    friend bool operator==(const CharacterQSeries& x, const CharacterQSeries& y) {
        if (x.order != y.order)
            throw std::domain_error("comparing CharacterQSeries of different orders");
        return x.entries == y.entries;
    }
};

inline std::string QPolynomial::str() const {
    if (c.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        if (!s.empty()) s += c[k] > 0 ? " + " : " - ";
        else if (c[k] < 0) s += "-";
        Int a = abs(c[k]);
        if (k == 0) s += a.str();
        else {
            if (a != 1) s += a.str() + "*";
            s += (k == 1) ? "q" : "q^" + std::to_string(k);
        }
    }
    return s;
}

inline std::string QSeries::str() const {
    std::string s = "[";
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) s += ",";
        s += c[k].str();
    }
    return s + "]";
}

} // namespace qflag
