#pragma once

#include <stdexcept>
#include <vector>

#include "shpf/partition.hpp"
#include "shpf/rational.hpp"

namespace shpf {

inline Integer catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan: n < 0");
    return exact_div(binomial(2ul * n, n), Integer(n + 1));
}

// Large Schroeder numbers via s_0 = 1, s_1 = 2,
// s_n = 3 s_{n-1} + sum_{k=1}^{n-2} s_k s_{n-k-1}.
inline Integer schroeder(int n) {
    if (n < 0) throw std::invalid_argument("schroeder: n < 0");
    std::vector<Integer> s(std::max(n + 1, 2));
    s[0] = 1;
    s[1] = 2;
    for (int m = 2; m <= n; ++m) {
        Integer v = 3 * s[m - 1];
        for (int k = 1; k <= m - 2; ++k) v += s[k] * s[m - k - 1];
        s[m] = v;
    }
    return s[n];
}

// Kreweras number: the number of sorted parking functions of shape lambda,
// Krew(lambda) = multinomial(n; m_1,...,m_n, n-l) / (n-l+1).
inline Integer krew(const Partition& lambda) {
    const int n = lambda.size();
    if (n < 1) throw std::invalid_argument("krew: empty partition");
    const int l = static_cast<int>(lambda.length());
    Integer numer = factorial(n);
    for (int i = 1; i <= n; ++i) numer = exact_div(numer, factorial(lambda.multiplicity(i)));
    numer = exact_div(numer, factorial(n - l));
    return exact_div(numer, Integer(n - l + 1));
}

// Odd Kreweras number for lambda with all parts odd:
// OKrew = (2^l / l!) * multinomial(l; m_1, m_3, ...)
//         * (n+l-1)(n+l-3)...(n-l+3),
// the trailing product stepping by 2 and empty when l < 2.
inline Integer okrew(const Partition& lambda) {
    if (!lambda.is_odd()) throw std::invalid_argument("okrew: partition has an even part");
    const int n = lambda.size();
    if (n < 1) throw std::invalid_argument("okrew: empty partition");
    const int l = static_cast<int>(lambda.length());
    Integer multi = factorial(l);
    for (int i = 1; i <= n; i += 2) multi = exact_div(multi, factorial(lambda.multiplicity(i)));
    Integer prod = 1;
    for (int f = n + l - 1; f >= n - l + 3; f -= 2) prod *= f;
    return exact_div(pow2(l) * multi * prod, factorial(l));
}

// OKrew(lambda) * binom(n, (n+l)/2) == Krew(lambda) * binom(n+l, (n+l)/2).
// (n+l is even whenever lambda is odd.)
inline bool okrew_ratio_check(const Partition& lambda) {
    if (!lambda.is_odd()) throw std::invalid_argument("okrew_ratio_check: non-odd partition");
    const int n = lambda.size();
    const int l = static_cast<int>(lambda.length());
    const unsigned long half = static_cast<unsigned long>(n + l) / 2;
    return okrew(lambda) * binomial(static_cast<unsigned long>(n), half) ==
           krew(lambda) * binomial(static_cast<unsigned long>(n + l), half);
}

} // namespace shpf
