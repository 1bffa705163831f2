#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shpf/parking.hpp"
#include "shpf/permutation.hpp"
#include "shpf/sqrt2.hpp"
#include "shpf/symfunc.hpp"

namespace shpf {

// Class function of S_n (ordinary) or of its double cover on positive
// representatives of odd classes (spin).  Values live in Q(sqrt 2); ordinary
// characters in scope are rational-valued.
class ClassFunction {
public:
    enum class Kind { Ordinary, Spin };

    ClassFunction(int degree, Kind kind) : degree_(degree), kind_(kind) {
        if (degree < 1) throw std::invalid_argument("ClassFunction: degree must be positive");
    }

    int degree() const { return degree_; }
    Kind kind() const { return kind_; }
    const std::map<Partition, Sqrt2Rational>& values() const { return values_; }

    void set(const Partition& lambda, const Sqrt2Rational& value) {
        if (lambda.size() != degree_)
            throw std::invalid_argument("ClassFunction: wrong-degree class");
        if (kind_ == Kind::Spin && !lambda.is_odd())
            throw std::invalid_argument("ClassFunction: spin values live on odd classes");
        values_[lambda] = value;
    }

    bool has(const Partition& lambda) const { return values_.count(lambda) != 0; }

    const Sqrt2Rational& at(const Partition& lambda) const {
        auto it = values_.find(lambda);
        if (it == values_.end())
            throw std::invalid_argument("ClassFunction: no value recorded at " + lambda.to_string());
        return it->second;
    }

    bool operator==(const ClassFunction&) const = default;

private:
    int degree_;
    Kind kind_;
    std::map<Partition, Sqrt2Rational> values_;
};

// ch: class functions -> symmetric functions, chi |-> sum chi(pi_lambda) p_lambda / z_lambda.
inline SymFunc frobenius(const ClassFunction& chi) {
    if (chi.kind() != ClassFunction::Kind::Ordinary)
        throw std::invalid_argument("frobenius: ordinary class function required");
    const int n = chi.degree();
    SymFunc out(n);
    for (const auto& lam : partitions_of(n)) {
        const Sqrt2Rational& v = chi.at(lam);
        if (!v.is_rational()) throw std::invalid_argument("frobenius: irrational value");
        out.add_term(lam, v.a / Rational(z_lambda(lam)));
    }
    return out;
}

// ch': spin class functions -> SymP, psi |-> sum 2^(l/2) psi(pi_lambda) p_lambda / z_lambda
// over odd lambda.  The exact Q(sqrt 2) coefficients, before rationality is imposed.
inline std::map<Partition, Sqrt2Rational> spin_characteristic_sqrt2(const ClassFunction& psi) {
    if (psi.kind() != ClassFunction::Kind::Spin)
        throw std::invalid_argument("spin_characteristic: spin class function required");
    const int n = psi.degree();
    std::map<Partition, Sqrt2Rational> out;
    for (const auto& lam : partitions_of(n, PartitionFilter::Odd)) {
        Sqrt2Rational c = pow2_half(lam.length()) * psi.at(lam);
        c = c * Sqrt2Rational(Rational(1, z_lambda(lam)));
        if (!c.is_zero()) out.emplace(lam, c);
    }
    return out;
}

inline SymFunc spin_characteristic(const ClassFunction& psi) {
    SymFunc out(psi.degree());
    for (const auto& [lam, c] : spin_characteristic_sqrt2(psi)) {
        if (!c.is_rational())
            throw std::domain_error("spin_characteristic: irrational coefficient at " +
                                    lam.to_string());
        out.add_term(lam, c.a);
    }
    return out;
}

inline ClassFunction trivial_character(int n) {
    ClassFunction chi(n, ClassFunction::Kind::Ordinary);
    for (const auto& lam : partitions_of(n)) chi.set(lam, Rational(1));
    return chi;
}

inline ClassFunction sign_character(int n) {
    ClassFunction chi(n, ClassFunction::Kind::Ordinary);
    for (const auto& lam : partitions_of(n))
        chi.set(lam, Rational((n - lam.length()) % 2 ? -1 : 1));
    return chi;
}

inline ClassFunction regular_character(int n) {
    ClassFunction chi(n, ClassFunction::Kind::Ordinary);
    for (const auto& lam : partitions_of(n)) chi.set(lam, Rational(0));
    std::vector<int> ones(n, 1);
    chi.set(Partition(ones), Rational(factorial(n)));
    return chi;
}

namespace detail {

// Count assignments of one value per cycle whose induced multiset parks.
// Cars exceeding slot v can never drop below it, so the deficit check is
// monotone and prunes the search.
inline Integer count_cycle_constant_pf(const std::vector<int>& parts, int n, std::size_t j,
                                       std::vector<int>& over) {
    if (j == parts.size()) return 1;
    Integer total = 0;
    for (int u = 1; u <= n; ++u) {
        bool ok = true;
        for (int v = 1; v < u; ++v)
            if (over[v] + parts[j] > n - v) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (int v = 0; v < u; ++v) over[v] += parts[j];
        total += count_cycle_constant_pf(parts, n, j + 1, over);
        for (int v = 0; v < u; ++v) over[v] -= parts[j];
    }
    return total;
}

} // namespace detail

// Fixed points of pi_lambda on Pf(n): parking functions constant on cycles.
inline Integer pf_fixed_count(const Partition& lambda) {
    const int n = lambda.size();
    std::vector<int> over(n + 1, 0); // over[v] = cars with value > v so far
    return detail::count_cycle_constant_pf(lambda.parts(), n, 0, over);
}

inline ClassFunction pf_character(int n) {
    ClassFunction chi(n, ClassFunction::Kind::Ordinary);
    for (const auto& lam : partitions_of(n)) chi.set(lam, Rational(pf_fixed_count(lam)));
    return chi;
}

// Trace of a permutation on the exterior algebra of C^n: product over cycles
// of (1 + (-1)^(len-1)), i.e. 2^l on odd classes and 0 otherwise.
inline ClassFunction exterior_character(int n) {
    ClassFunction chi(n, ClassFunction::Kind::Ordinary);
    for (const auto& lam : partitions_of(n))
        chi.set(lam, lam.is_odd() ? Rational(pow2(lam.length())) : Rational(0));
    return chi;
}

// Brute-force trace of w on the wedge basis, optionally restricted to the
// even (parity 0) or odd (parity 1) graded half; parity -1 sums everything.
inline Rational exterior_fixed_trace(const Permutation& w, int parity = -1) {
    const int n = w.n();
    Rational tr(0);
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::vector<int> subset;
        for (int i = 1; i <= n; ++i)
            if (mask >> (i - 1) & 1) subset.push_back(i);
        if (parity >= 0 && static_cast<int>(subset.size()) % 2 != parity) continue;
        bool invariant = true;
        for (int i : subset)
            if (!(mask >> (w(i) - 1) & 1)) {
                invariant = false;
                break;
            }
        if (invariant) tr += restricted_sign(w, subset);
    }
    return tr;
}

// Pointwise product of the parking and exterior characters: the character of
// the signed parking module.
inline ClassFunction naive_character(int n) {
    ClassFunction pf = pf_character(n), chi(n, ClassFunction::Kind::Ordinary);
    for (const auto& lam : partitions_of(n))
        chi.set(lam,
                lam.is_odd() ? Rational(pf.at(lam).a * pow2(lam.length())) : Rational(0));
    return chi;
}

// Spin lift: the parking factor times the Clifford trace 2^((n+l)/2) on odd classes.
inline ClassFunction spin_naive_character(int n) {
    ClassFunction pf = pf_character(n), psi(n, ClassFunction::Kind::Spin);
    for (const auto& lam : partitions_of(n, PartitionFilter::Odd))
        psi.set(lam, Rational(pf.at(lam).a * pow2((n + lam.length()) / 2)));
    return psi;
}

// Basis label of the signed parking modules: (p, sigma) with full +-1 signs.
using NaiveLabel = std::pair<std::vector<int>, std::vector<int>>;

// Signed fixed-point trace of w on the span of the given labels: every label
// fixed by w contributes the sign of w restricted to its negative positions.
inline Rational class_trace(const std::vector<NaiveLabel>& members, const Permutation& w,
                            bool check_closure = true) {
    if (check_closure && !members.empty()) {
        const int n = static_cast<int>(members.front().first.size());
        std::set<NaiveLabel> pool(members.begin(), members.end());
        for (int i = 1; i < n; ++i) {
            auto im = Permutation::identity(n).images();
            std::swap(im[i - 1], im[i]);
            Permutation s{im};
            for (const auto& [p, sigma] : members)
                if (!pool.count({s.apply(p), s.apply(sigma)}))
                    throw std::invalid_argument("class_trace: member list not closed");
        }
    }
    Rational tr(0);
    for (const auto& [p, sigma] : members) {
        if (w.apply(p) != p || w.apply(sigma) != sigma) continue;
        std::vector<int> negatives;
        for (std::size_t i = 0; i < sigma.size(); ++i)
            if (sigma[i] == -1) negatives.push_back(static_cast<int>(i) + 1);
        tr += restricted_sign(w, negatives);
    }
    return tr;
}

// All labels sorting to the given object: rearrangements of p paired with
// sign vectors whose per-value products match sbar.
inline std::vector<NaiveLabel> class_members(const SortedNaiveShifted& x) {
    const int n = static_cast<int>(x.p.size());
    std::vector<NaiveLabel> out;
    std::vector<int> q = x.p;
    do {
        std::vector<std::vector<int>> slots(n); // positions per value
        for (int i = 0; i < n; ++i) slots[q[i] - 1].push_back(i);
        std::vector<int> free_pos, forced_pos;
        for (int v = 0; v < n; ++v) {
            if (slots[v].empty()) continue;
            for (std::size_t k = 0; k + 1 < slots[v].size(); ++k) free_pos.push_back(slots[v][k]);
            forced_pos.push_back(slots[v].back());
        }
        for (unsigned long mask = 0; mask < (1ul << free_pos.size()); ++mask) {
            std::vector<int> sigma(n, 1);
            for (std::size_t k = 0; k < free_pos.size(); ++k)
                sigma[free_pos[k]] = (mask >> k & 1) ? -1 : 1;
            for (int i : forced_pos) {
                int prod = 1;
                for (int pos : slots[q[i] - 1])
                    if (pos != i) prod *= sigma[pos];
                sigma[i] = x.sbar[q[i] - 1] * prod;
            }
            out.emplace_back(q, std::move(sigma));
        }
    } while (std::next_permutation(q.begin(), q.end()));
    return out;
}

// Character of the module spanned by class_members(x), by brute-force traces
// at one representative per class.
inline ClassFunction class_character(const SortedNaiveShifted& x) {
    const int n = static_cast<int>(x.p.size());
    auto members = class_members(x);
    ClassFunction chi(n, ClassFunction::Kind::Ordinary);
    bool first = true;
    for (const auto& lam : partitions_of(n)) {
        chi.set(lam, class_trace(members, class_representative(lam), first));
        first = false; // closure is label-set property; check once
    }
    return chi;
}

} // namespace shpf
