#pragma once

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "shpf/counting.hpp"
#include "shpf/parking.hpp"
#include "shpf/partition.hpp"
#include "shpf/rational.hpp"

namespace shpf {

// Homogeneous symmetric function in the power-sum basis:
// f = sum_lambda coeffs[lambda] * p_lambda over lambda |- degree.
class SymFunc {
public:
    explicit SymFunc(int degree) : degree_(degree) {
        if (degree < 0) throw std::invalid_argument("SymFunc: negative degree");
    }

    int degree() const { return degree_; }
    const std::map<Partition, Rational>& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(const Partition& lambda) const {
        auto it = coeffs_.find(lambda);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void add_term(const Partition& lambda, const Rational& c) {
        if (lambda.size() != degree_) throw std::invalid_argument("SymFunc: wrong-degree partition");
        if (c == 0) return;
        auto [it, fresh] = coeffs_.emplace(lambda, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    bool is_symp() const {
        for (const auto& [lam, c] : coeffs_)
            if (!lam.is_odd()) return false;
        return true;
    }

    friend bool operator==(const SymFunc& f, const SymFunc& g) {
        return f.degree_ == g.degree_ && f.coeffs_ == g.coeffs_;
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [lam, c] : coeffs_) {
            os << (first ? "" : " + ") << shpf::to_string(c) << "*p" << lam.to_string();
            first = false;
        }
        return os.str();
    }

private:
    int degree_;
    std::map<Partition, Rational> coeffs_;
};

inline SymFunc p_monomial(const Partition& lambda) {
    SymFunc f(lambda.size());
    f.add_term(lambda, 1);
    return f;
}

inline SymFunc sym_zero(int degree) { return SymFunc(degree); }

inline SymFunc add(const SymFunc& f, const SymFunc& g) {
    if (f.degree() != g.degree()) throw std::invalid_argument("add: degree mismatch");
    SymFunc out = f;
    for (const auto& [lam, c] : g.terms()) out.add_term(lam, c);
    return out;
}

inline SymFunc scale(const Rational& c, const SymFunc& f) {
    SymFunc out(f.degree());
    if (c == 0) return out;
    for (const auto& [lam, a] : f.terms()) out.add_term(lam, c * a);
    return out;
}

// p_lambda * p_mu = p_{lambda union mu} (concatenate parts and re-sort)
inline SymFunc mul(const SymFunc& f, const SymFunc& g) {
    SymFunc out(f.degree() + g.degree());
    for (const auto& [lam, a] : f.terms())
        for (const auto& [mu, b] : g.terms()) {
            std::vector<int> parts = lam.parts();
            parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
            out.add_term(Partition::from_multiset(parts), a * b);
        }
    return out;
}

// Hall inner product: <p_lambda, p_mu> = delta * z_lambda
inline Rational hall_inner(const SymFunc& f, const SymFunc& g) {
    if (f.degree() != g.degree()) throw std::invalid_argument("hall_inner: degree mismatch");
    Rational out = 0;
    for (const auto& [lam, a] : f.terms()) {
        Rational b = g.coeff(lam);
        if (b != 0) out += Rational(z_lambda(lam)) * a * b;
    }
    return out;
}

// Kronecker product: p_lambda * p_mu = delta * z_lambda * p_lambda
inline SymFunc kronecker(const SymFunc& f, const SymFunc& g) {
    if (f.degree() != g.degree()) throw std::invalid_argument("kronecker: degree mismatch");
    SymFunc out(f.degree());
    for (const auto& [lam, a] : f.terms()) {
        Rational b = g.coeff(lam);
        if (b != 0) out.add_term(lam, Rational(z_lambda(lam)) * a * b);
    }
    return out;
}

// h_n = sum_{lambda |- n} p_lambda / z_lambda
inline SymFunc h(int n) {
    SymFunc out(n);
    for (const auto& lam : partitions_of(n)) out.add_term(lam, Rational(1) / Rational(z_lambda(lam)));
    return out;
}

// e_n = sum_{lambda |- n} (-1)^{n - l(lambda)} p_lambda / z_lambda
inline SymFunc e(int n) {
    SymFunc out(n);
    for (const auto& lam : partitions_of(n)) {
        Rational c = Rational(1) / Rational(z_lambda(lam));
        if ((n - lam.length()) % 2) c = -c;
        out.add_term(lam, c);
    }
    return out;
}

inline SymFunc h_prod(const Partition& lambda) {
    SymFunc out = h(0);
    for (int part : lambda.parts()) out = mul(out, h(part));
    return out;
}

inline SymFunc e_prod(const Partition& lambda) {
    SymFunc out = e(0);
    for (int part : lambda.parts()) out = mul(out, e(part));
    return out;
}

// Shiftification: p_{2k-1} -> 2 p_{2k-1}, p_{2k} -> 0, so
// p_lambda -> 2^{l(lambda)} p_lambda when lambda is odd, else 0.
inline SymFunc shift(const SymFunc& f) {
    SymFunc out(f.degree());
    for (const auto& [lam, c] : f.terms())
        if (lam.is_odd()) out.add_term(lam, c * Rational(pow2(lam.length())));
    return out;
}

// P_k with sh(h_k) = 2 P_k; P_0 = 1 by convention.
inline const SymFunc& big_p(int k) {
    if (k < 0) throw std::invalid_argument("big_p: k < 0");
    static std::map<int, SymFunc> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(k);
    if (it == cache.end())
        it = cache.emplace(k, k == 0 ? h(0) : scale(Rational(1, 2), shift(h(k)))).first;
    return it->second;
}

// P_k = (1/2) sum_{i=0}^k h_i e_{k-i} = sum_{i odd} h_i e_{k-i} = sum_{i even} h_i e_{k-i}
inline bool p_def_forms(int k) {
    if (k < 1) throw std::invalid_argument("p_def_forms: k < 1");
    SymFunc half(k), odd_sum(k), even_sum(k);
    for (int i = 0; i <= k; ++i) {
        SymFunc term = mul(h(i), e(k - i));
        half = add(half, scale(Rational(1, 2), term));
        if (i % 2)
            odd_sum = add(odd_sum, term);
        else
            even_sum = add(even_sum, term);
    }
    const SymFunc& pk = big_p(k);
    return half == pk && odd_sum == pk && even_sum == pk;
}

// V_lambda = prod_i P_{lambda_i}
inline const SymFunc& v_func(const Partition& lambda) {
    static std::map<Partition, SymFunc> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(lambda);
    if (it == cache.end()) {
        SymFunc out = big_p(0);
        for (int part : lambda.parts()) out = mul(out, big_p(part));
        it = cache.emplace(lambda, std::move(out)).first;
    }
    return it->second;
}

// R_m = P_m for m odd, R_m = sum_{i=1}^{m/2} P_{2i} P_{m-2i} for m even;
// R_lambda multiplies over the parts.
inline SymFunc r_func(const Partition& lambda) {
    SymFunc out = big_p(0);
    for (int part : lambda.parts()) {
        if (part % 2) {
            out = mul(out, big_p(part));
        } else {
            SymFunc rm(part);
            for (int i = 1; i <= part / 2; ++i) rm = add(rm, mul(big_p(2 * i), big_p(part - 2 * i)));
            out = mul(out, rm);
        }
    }
    return out;
}

// sum_{i=1}^k P_{2i} P_{2k-2i} == sum_{i=1}^k P_{2i-1} P_{2k-2i+1}
inline bool p_relation_check(int k) {
    if (k < 1) throw std::invalid_argument("p_relation_check: k < 1");
    SymFunc lhs(2 * k), rhs(2 * k);
    for (int i = 1; i <= k; ++i) {
        lhs = add(lhs, mul(big_p(2 * i), big_p(2 * k - 2 * i)));
        rhs = add(rhs, mul(big_p(2 * i - 1), big_p(2 * k - 2 * i + 1)));
    }
    return lhs == rhs;
}

// Coefficients c_lambda with f = sum c_lambda V_lambda over odd lambda |- n.
// Solved exactly: Gaussian elimination with full pivoting on the square
// matrix [p_mu-coefficient of V_lambda], then a reconstruction check.
inline std::map<Partition, Rational> expand_odd_v(const SymFunc& f) {
    if (!f.is_symp()) throw std::invalid_argument("expand_odd_v: input not supported on odd partitions");
    const int n = f.degree();
    auto odd = partitions_of(n, PartitionFilter::Odd);
    const int m = static_cast<int>(odd.size());
    std::map<Partition, int> row_of;
    for (int i = 0; i < m; ++i) row_of.emplace(odd[i], i);

    // A[i][j] = coefficient of p_{odd[i]} in V_{odd[j]}; b[i] = coefficient in f
    std::vector<std::vector<Rational>> A(m, std::vector<Rational>(m, Rational(0)));
    std::vector<Rational> b(m, Rational(0));
    for (int j = 0; j < m; ++j)
        for (const auto& [mu, c] : v_func(odd[j]).terms()) A[row_of.at(mu)][j] = c;
    for (const auto& [mu, c] : f.terms()) b[row_of.at(mu)] = c;

    std::vector<int> col_perm(m);
    for (int j = 0; j < m; ++j) col_perm[j] = j;
    for (int step = 0; step < m; ++step) {
        int pr = -1, pc = -1;
        for (int i = step; i < m && pr < 0; ++i)
            for (int j = step; j < m; ++j)
                if (A[i][j] != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) throw std::logic_error("expand_odd_v: singular system");
        std::swap(A[step], A[pr]);
        std::swap(b[step], b[pr]);
        for (int i = 0; i < m; ++i) std::swap(A[i][step], A[i][pc]);
        std::swap(col_perm[step], col_perm[pc]);
        for (int i = step + 1; i < m; ++i) {
            if (A[i][step] == 0) continue;
            Rational factor = A[i][step] / A[step][step];
            for (int j = step; j < m; ++j) A[i][j] -= factor * A[step][j];
            b[i] -= factor * b[step];
        }
    }
    std::vector<Rational> x(m, Rational(0));
    for (int i = m - 1; i >= 0; --i) {
        Rational acc = b[i];
        for (int j = i + 1; j < m; ++j) acc -= A[i][j] * x[j];
        x[i] = acc / A[i][i];
    }

    std::map<Partition, Rational> out;
    SymFunc recon(n);
    for (int j = 0; j < m; ++j) {
        if (x[j] == 0) continue;
        out.emplace(odd[col_perm[j]], x[j]);
        recon = add(recon, scale(x[j], v_func(odd[col_perm[j]])));
    }
    if (!(recon == f)) throw std::logic_error("expand_odd_v: reconstruction failed");
    return out;
}

// PF_n = sum_{lambda |- n} Krew(lambda) h_lambda, cross-checked against the
// direct sum of h_{shape(p)} over sorted parking functions.
inline SymFunc pf_symfunc(int n) {
    if (n < 1) throw std::invalid_argument("pf_symfunc: n < 1");
    SymFunc closed(n);
    for (const auto& lam : partitions_of(n))
        closed = add(closed, scale(Rational(krew(lam)), h_prod(lam)));
    SymFunc direct(n);
    for_each_sorted_pf(n, [&](const std::vector<int>& p) { direct = add(direct, h_prod(shape(p))); });
    if (!(closed == direct)) throw std::logic_error("pf_symfunc: closed form disagrees with enumeration");
    return closed;
}

inline SymFunc sh_symfunc(int n) { return shift(pf_symfunc(n)); }

// SH_n = sum_{lambda |- n} 2^{l(lambda)} Krew(lambda) V_lambda, over all shapes
inline std::map<Partition, Rational> naive_v_expansion(int n) {
    if (n < 1) throw std::invalid_argument("naive_v_expansion: n < 1");
    std::map<Partition, Rational> out;
    for (const auto& lam : partitions_of(n)) out.emplace(lam, Rational(pow2(lam.length()) * krew(lam)));
    return out;
}

} // namespace shpf
