#pragma once

#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "shpf/partition.hpp"
#include "shpf/rational.hpp"
#include "shpf/sqrt2.hpp"

namespace shpf {

// Element a + b*i + c*sqrt(2) + d*i*sqrt(2) of Q(i, sqrt 2).
struct RingQI2 {
    Rational a = 0, b = 0, c = 0, d = 0;

    RingQI2() = default;
    RingQI2(Rational ra, Rational rb, Rational rc, Rational rd)
        : a(std::move(ra)), b(std::move(rb)), c(std::move(rc)), d(std::move(rd)) {}
    RingQI2(const Rational& r) : a(r) {} // NOLINT implicit by design
    RingQI2(int r) : a(r) {}             // NOLINT implicit by design

    static RingQI2 i() { return {0, 1, 0, 0}; }
    static RingQI2 sqrt2() { return {0, 0, 1, 0}; }
    static RingQI2 i_over_sqrt2() { return {0, 0, 0, Rational(1, 2)}; } // i/sqrt2 = i*sqrt2/2

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
    bool is_rational() const { return b == 0 && c == 0 && d == 0; }

    friend RingQI2 operator+(const RingQI2& x, const RingQI2& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend RingQI2 operator-(const RingQI2& x, const RingQI2& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    friend RingQI2 operator-(const RingQI2& x) { return {-x.a, -x.b, -x.c, -x.d}; }
    friend RingQI2 operator*(const RingQI2& x, const RingQI2& y) {
        return {Rational(x.a * y.a - x.b * y.b + 2 * x.c * y.c - 2 * x.d * y.d),
                Rational(x.a * y.b + x.b * y.a + 2 * x.c * y.d + 2 * x.d * y.c),
                Rational(x.a * y.c + x.c * y.a - x.b * y.d - x.d * y.b),
                Rational(x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b)};
    }
    RingQI2& operator+=(const RingQI2& y) { return *this = *this + y; }
    RingQI2& operator*=(const RingQI2& y) { return *this = *this * y; }

    friend bool operator==(const RingQI2& x, const RingQI2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        auto piece = [&](const Rational& r, const char* unit) {
            if (r == 0) return;
            os << (first ? "" : " + ") << shpf::to_string(r) << unit;
            first = false;
        };
        piece(a, "");
        piece(b, "*i");
        piece(c, "*sqrt(2)");
        piece(d, "*i*sqrt(2)");
        return os.str();
    }
};

// Sign accumulated when sorting xi_I * xi_J into the canonical order: each
// generator of J walks left past the members of I above it.
inline int reorder_sign(unsigned long lhs, unsigned long rhs) {
    int swaps = 0;
    for (unsigned long rest = rhs; rest;) {
        int j = std::countr_zero(rest);
        rest &= rest - 1;
        swaps += std::popcount(lhs >> (j + 1));
    }
    return swaps % 2 ? -1 : 1;
}

// Element of the Clifford algebra on n generators xi_1..xi_n with
// xi_k^2 = 1 and xi_j xi_k = -xi_k xi_j; basis xi_I indexed by subsets,
// encoded as bitmasks (bit k-1 for xi_k).
class CliffordElement {
public:
    explicit CliffordElement(int n) : n_(n) {
        if (n < 0 || n > 62) throw std::invalid_argument("CliffordElement: bad generator count");
    }

    static CliffordElement basis(int n, unsigned long subset, const RingQI2& coeff = 1) {
        CliffordElement out(n);
        out.add_term(subset, coeff);
        return out;
    }

    static CliffordElement generator(int k, int n) {
        if (k < 1 || k > n) throw std::invalid_argument("CliffordElement: generator out of range");
        return basis(n, 1ul << (k - 1));
    }

    int n() const { return n_; }
    const std::map<unsigned long, RingQI2>& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    RingQI2 coeff(unsigned long subset) const {
        auto it = coeffs_.find(subset);
        return it == coeffs_.end() ? RingQI2() : it->second;
    }

    void add_term(unsigned long subset, const RingQI2& c) {
        if (subset >> n_) throw std::invalid_argument("CliffordElement: subset out of range");
        if (c.is_zero()) return;
        auto [it, fresh] = coeffs_.emplace(subset, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    friend bool operator==(const CliffordElement& x, const CliffordElement& y) {
        return x.n_ == y.n_ && x.coeffs_ == y.coeffs_;
    }

    friend CliffordElement operator-(const CliffordElement& x) {
        CliffordElement out(x.n_);
        for (const auto& [mask, c] : x.coeffs_) out.coeffs_.emplace(mask, -c);
        return out;
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [mask, c] : coeffs_) {
            os << (first ? "" : " + ") << "(" << c.to_string() << ")*xi{";
            bool inner = true;
            for (int k = 1; k <= n_; ++k)
                if (mask >> (k - 1) & 1) {
                    os << (inner ? "" : ",") << k;
                    inner = false;
                }
            os << "}";
            first = false;
        }
        return os.str();
    }

private:
    int n_;
    std::map<unsigned long, RingQI2> coeffs_;
};

inline CliffordElement clifford_add(const CliffordElement& x, const CliffordElement& y) {
    if (x.n() != y.n()) throw std::invalid_argument("clifford_add: generator count mismatch");
    CliffordElement out = x;
    for (const auto& [mask, c] : y.terms()) out.add_term(mask, c);
    return out;
}

inline CliffordElement clifford_scale(const RingQI2& s, const CliffordElement& x) {
    CliffordElement out(x.n());
    for (const auto& [mask, c] : x.terms()) out.add_term(mask, s * c);
    return out;
}

inline CliffordElement clifford_mul(const CliffordElement& x, const CliffordElement& y) {
    if (x.n() != y.n()) throw std::invalid_argument("clifford_mul: generator count mismatch");
    CliffordElement out(x.n());
    for (const auto& [mi, ci] : x.terms())
        for (const auto& [mj, cj] : y.terms()) {
            RingQI2 c = ci * cj;
            if (reorder_sign(mi, mj) < 0) c = -c;
            out.add_term(mi ^ mj, c);
        }
    return out;
}

// Image of the double-cover generator s_k: (i/sqrt2)(xi_k - xi_{k+1});
// squares to -1 and satisfies the braid and far-commutation relations up to
// the central sign.
inline CliffordElement embed_generator(int k, int n) {
    if (k < 1 || k >= n) throw std::invalid_argument("embed_generator: index out of range");
    CliffordElement out(n);
    out.add_term(1ul << (k - 1), RingQI2::i_over_sqrt2());
    out.add_term(1ul << k, -RingQI2::i_over_sqrt2());
    return out;
}

// Lift of the block-cycle representative of an odd class: for each part m on
// a fresh block of values, the product of its m-1 consecutive generators.
inline CliffordElement embed_positive_rep(const Partition& lambda, int n) {
    if (lambda.size() != n) throw std::invalid_argument("embed_positive_rep: size mismatch");
    if (!lambda.is_odd()) throw std::invalid_argument("embed_positive_rep: odd class required");
    CliffordElement out = CliffordElement::basis(n, 0);
    int r = 0;
    for (int part : lambda.parts()) {
        for (int k = r + 1; k <= r + part - 1; ++k) out = clifford_mul(out, embed_generator(k, n));
        r += part;
    }
    return out;
}

// Left multiplication permutes the xi basis up to scalars, and only the
// identity component hits the diagonal.
inline RingQI2 trace_left_mul(const CliffordElement& x) {
    RingQI2 tr = x.coeff(0);
    Rational dim(pow2(x.n()));
    return {Rational(tr.a * dim), Rational(tr.b * dim), Rational(tr.c * dim),
            Rational(tr.d * dim)};
}

} // namespace shpf
