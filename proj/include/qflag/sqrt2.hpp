#pragma once

#include "qflag/rational.hpp"

#include <stdexcept>
#include <string>

namespace qflag {

/// Element a + b*sqrt(2) of the real quadratic field Q(sqrt 2).
///
/// This is the coefficient field of every polynomial in the library: the
/// spinor relations of the B-series ideals carry sqrt(1/2) = (1/2)sqrt(2),
/// and plain rational input embeds with b = 0.
struct Sqrt2Rat {
    Rat a{0};
    Rat b{0};

    Sqrt2Rat() = default;
    Sqrt2Rat(int v) : a(v) {}
    Sqrt2Rat(Rat av) : a(std::move(av)) {}
    Sqrt2Rat(Rat av, Rat bv) : a(std::move(av)), b(std::move(bv)) {}

    static Sqrt2Rat sqrt2() { return {Rat(0), Rat(1)}; }
    static Sqrt2Rat sqrt_half() { return {Rat(0), Rat(1, 2)}; }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    friend Sqrt2Rat operator+(const Sqrt2Rat& x, const Sqrt2Rat& y) { return {x.a + y.a, x.b + y.b}; }
    friend Sqrt2Rat operator-(const Sqrt2Rat& x, const Sqrt2Rat& y) { return {x.a - y.a, x.b - y.b}; }
    friend Sqrt2Rat operator-(const Sqrt2Rat& x) { return {-x.a, -x.b}; }
    friend Sqrt2Rat operator*(const Sqrt2Rat& x, const Sqrt2Rat& y) {
        return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
    }

    /// (a + b sqrt2)^{-1} = (a - b sqrt2)/(a^2 - 2 b^2); the norm a^2 - 2b^2
    /// vanishes only at 0 because sqrt(2) is irrational.
    Sqrt2Rat inverse() const {
        Rat norm = a * a - 2 * b * b;
        if (norm == 0) throw std::domain_error("division by zero in Q(sqrt2)");
        return {a / norm, -b / norm};
    }

    friend Sqrt2Rat operator/(const Sqrt2Rat& x, const Sqrt2Rat& y) { return x * y.inverse(); }

    Sqrt2Rat& operator+=(const Sqrt2Rat& y) { *this = *this + y; return *this; }
    Sqrt2Rat& operator-=(const Sqrt2Rat& y) { *this = *this - y; return *this; }
    Sqrt2Rat& operator*=(const Sqrt2Rat& y) { *this = *this * y; return *this; }

    friend bool operator==(const Sqrt2Rat& x, const Sqrt2Rat& y) { return x.a == y.a && x.b == y.b; }

    std::string str() const {
        if (b == 0) return a.str();
        std::string s;
        if (a != 0) s = a.str() + (b > 0 ? "+" : "");
        if (b == 1) s += "sqrt2";
        else if (b == -1) s += "-sqrt2";
        else s += b.str() + "*sqrt2";
        return s;
    }
};

} // namespace qflag
