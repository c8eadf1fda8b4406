#pragma once

#include <compare>
#include <string>
#include <vector>

namespace qflag {

/// A weight in the canonical presentation: the integer vector of Dynkin
/// labels (lambda, alpha_i^vee), i = 1..rank.  Two weights are equal iff
/// their label vectors are equal; this quotient absorbs the overcompleteness
/// of the epsilon basis of the A-series and the half-integer epsilon
/// coordinates of spinor weights.
struct Weight {
    std::vector<int> d;

    Weight() = default;
    explicit Weight(std::vector<int> v) : d(std::move(v)) {}
    Weight(std::initializer_list<int> v) : d(v) {}

    static Weight zero(std::size_t rank) { return Weight(std::vector<int>(rank, 0)); }

    std::size_t rank() const { return d.size(); }
    bool is_zero() const {
        for (int x : d) if (x != 0) return false;
        return true;
    }
    bool is_dominant() const {
        for (int x : d) if (x < 0) return false;
        return true;
    }

    friend Weight operator+(const Weight& x, const Weight& y) {
        Weight r = x;
        for (std::size_t i = 0; i < r.d.size(); ++i) r.d[i] += y.d[i];
        return r;
    }
    friend Weight operator-(const Weight& x, const Weight& y) {
        Weight r = x;
        for (std::size_t i = 0; i < r.d.size(); ++i) r.d[i] -= y.d[i];
        return r;
    }
    friend Weight operator-(const Weight& x) {
        Weight r = x;
        for (auto& v : r.d) v = -v;
        return r;
    }
    friend Weight operator*(int c, const Weight& x) {
        Weight r = x;
        for (auto& v : r.d) v *= c;
        return r;
    }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight& x, const Weight& y) { return x.d <=> y.d; }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(d[i]);
        }
        return s + "]";
    }
};

} // namespace qflag
