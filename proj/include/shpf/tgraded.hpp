#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shpf/parking.hpp"
#include "shpf/shifted.hpp"
#include "shpf/symfunc.hpp"

namespace shpf {

// Dense polynomial in the grading variable t with rational coefficients.
// coeffs()[k] multiplies t^k; no trailing zeros are stored.
class TPoly {
public:
    TPoly() = default;

    explicit TPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

    static TPoly monomial(int power, const Rational& coeff) {
        if (power < 0) throw std::invalid_argument("TPoly: negative power");
        if (coeff == 0) return {};
        std::vector<Rational> c(power + 1, Rational(0));
        c.back() = coeff;
        return TPoly(std::move(c));
    }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for the zero poly

    Rational at(int power) const {
        return power >= 0 && power < static_cast<int>(c_.size()) ? c_[power] : Rational(0);
    }

    TPoly& operator+=(const TPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }

    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }

    friend TPoly operator*(const Rational& s, const TPoly& f) {
        if (s == 0) return {};
        TPoly out = f;
        for (auto& c : out.c_) c *= s;
        return out;
    }

    Rational evaluate(const Rational& t) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    friend bool operator==(const TPoly& f, const TPoly& g) { return f.c_ == g.c_; }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            if (c_[k] == 0) continue;
            os << (first ? "" : " + ") << shpf::to_string(c_[k]);
            if (k == 1) os << "*t";
            if (k > 1) os << "*t^" << k;
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// Symmetric function in the p-basis whose coefficients are polynomials in t.
class TSymFunc {
public:
    explicit TSymFunc(int degree) : degree_(degree) {
        if (degree < 0) throw std::invalid_argument("TSymFunc: negative degree");
    }

    int degree() const { return degree_; }
    const std::map<Partition, TPoly>& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    TPoly coeff(const Partition& lambda) const {
        auto it = coeffs_.find(lambda);
        return it == coeffs_.end() ? TPoly() : it->second;
    }

    void add_term(const Partition& lambda, const TPoly& c) {
        if (lambda.size() != degree_)
            throw std::invalid_argument("TSymFunc: wrong-degree partition");
        if (c.is_zero()) return;
        auto [it, fresh] = coeffs_.emplace(lambda, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    void add_term(const Partition& lambda, int power, const Rational& c) {
        add_term(lambda, TPoly::monomial(power, c));
    }

    SymFunc evaluate(const Rational& t) const {
        SymFunc out(degree_);
        for (const auto& [lam, poly] : coeffs_) out.add_term(lam, poly.evaluate(t));
        return out;
    }

    friend bool operator==(const TSymFunc& f, const TSymFunc& g) {
        return f.degree_ == g.degree_ && f.coeffs_ == g.coeffs_;
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [lam, poly] : coeffs_) {
            os << (first ? "" : " + ") << "(" << poly.to_string() << ")*p" << lam.to_string();
            first = false;
        }
        return os.str();
    }

private:
    int degree_;
    std::map<Partition, TPoly> coeffs_;
};

inline TPoly hall_inner(const TSymFunc& f, const SymFunc& g) {
    if (f.degree() != g.degree()) throw std::invalid_argument("hall_inner: degree mismatch");
    TPoly out;
    for (const auto& [lam, poly] : f.terms()) {
        Rational c = g.coeff(lam);
        if (c != 0) out += (c * z_lambda(lam)) * poly;
    }
    return out;
}

namespace detail {

inline TSymFunc graded_v_sum(int n, const std::map<Partition, std::map<int, long>>& counts) {
    TSymFunc out(n);
    for (const auto& [lam, by_area] : counts) {
        TPoly weight;
        for (const auto& [a, c] : by_area) weight += TPoly::monomial(a, Rational(c));
        for (const auto& [mu, c] : v_func(lam).terms()) out.add_term(mu, c * weight);
    }
    return out;
}

} // namespace detail

// The area grading of the shifted parking functions, computed twice: over
// sorted naive objects with t^area, and over sorted odd objects with
// t^area_o.  The two sums agree and specialize at t = 1 to sh_symfunc(n).
//
// On the odd side the V-weight is indexed by the shape of the naive preimage
// under the matching bijection, not by the odd object's own shape.  That
// choice is forced: at n = 4 the only naive contribution in top area is
// 2t^6 V_(4), and P_4 = (2p_(3,1) + p_(1,1,1,1))/3 is not a nonnegative
// combination of V_(3,1) and V_(1,1,1,1), so no grading of the odd
// enumeration weighted by its own (odd) shapes can match.  Weighting by the
// odd shapes does recover the same sum at t = 1.
inline std::pair<TSymFunc, TSymFunc> t_graded(int n) {
    std::map<Partition, std::map<int, long>> naive_counts, odd_counts;
    for_each_sorted_naive(
        n, [&](const SortedNaiveShifted& x) { ++naive_counts[shape(x.p)][area(x.p)]; });
    for_each_sorted_odd(
        n, [&](const SortedOddShifted& y) { ++odd_counts[shape(odd_to_naive(y).p)][area_o(y)]; });
    return {detail::graded_v_sum(n, naive_counts), detail::graded_v_sum(n, odd_counts)};
}

} // namespace shpf
