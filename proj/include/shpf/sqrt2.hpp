#pragma once

#include <sstream>
#include <string>

#include "shpf/rational.hpp"

namespace shpf {

// Element a + b*sqrt(2) of the real quadratic field Q(sqrt 2).
struct Sqrt2Rational {
    Rational a = 0;
    Rational b = 0;

    Sqrt2Rational() = default;
    Sqrt2Rational(Rational rational_part, Rational sqrt2_part)
        : a(std::move(rational_part)), b(std::move(sqrt2_part)) {}
    Sqrt2Rational(const Rational& r) : a(r) {}           // NOLINT implicit by design
    Sqrt2Rational(int r) : a(r) {}                       // NOLINT implicit by design

    static Sqrt2Rational sqrt2() { return {Rational(0), Rational(1)}; }

    bool is_rational() const { return b == 0; }
    bool is_zero() const { return a == 0 && b == 0; }

    friend Sqrt2Rational operator+(const Sqrt2Rational& x, const Sqrt2Rational& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend Sqrt2Rational operator-(const Sqrt2Rational& x, const Sqrt2Rational& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend Sqrt2Rational operator-(const Sqrt2Rational& x) { return {-x.a, -x.b}; }
    friend Sqrt2Rational operator*(const Sqrt2Rational& x, const Sqrt2Rational& y) {
        return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    Sqrt2Rational& operator+=(const Sqrt2Rational& y) { return *this = *this + y; }
    Sqrt2Rational& operator*=(const Sqrt2Rational& y) { return *this = *this * y; }

    friend bool operator==(const Sqrt2Rational& x, const Sqrt2Rational& y) {
        return x.a == y.a && x.b == y.b;
    }

    std::string to_string() const {
        std::ostringstream os;
        if (is_rational()) {
            os << shpf::to_string(a);
        } else {
            if (a != 0) os << shpf::to_string(a) << " + ";
            os << shpf::to_string(b) << "*sqrt(2)";
        }
        return os.str();
    }
};

// 2^(k/2) as an exact element: rational for even k, a sqrt(2) multiple for odd k.
inline Sqrt2Rational pow2_half(int k) {
    bool odd = k % 2 != 0;
    int half = (k - (odd ? 1 : 0)) / 2;
    Rational r = half >= 0 ? Rational(pow2(half)) : Rational(1, pow2(-half));
    return odd ? Sqrt2Rational(Rational(0), r) : Sqrt2Rational(r, Rational(0));
}

} // namespace shpf
