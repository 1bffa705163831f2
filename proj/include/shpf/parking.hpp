#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "shpf/partition.hpp"

namespace shpf {

// p is a parking function iff its i-th smallest entry is at most i,
// equivalently #{j : p_j <= v} >= v for every v in [n].
inline bool is_parking(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    if (n == 0) return false;
    std::vector<int> count(n + 1, 0);
    for (int x : p) {
        if (x <= 0) throw std::invalid_argument("is_parking: non-positive entry");
        if (x > n) return false;
        ++count[x];
    }
    int below = 0;
    for (int v = 1; v <= n; ++v) {
        below += count[v];
        if (below < v) return false;
    }
    return true;
}

inline void require_parking(const std::vector<int>& p, const char* who) {
    if (!is_parking(p)) throw std::invalid_argument(std::string(who) + ": not a parking function");
}

inline std::vector<int> sort_pf(std::vector<int> p) {
    require_parking(p, "sort_pf");
    std::sort(p.begin(), p.end());
    return p;
}

// content(p)_k = #{i : p_i = k}, k = 1..n
inline std::vector<int> content(const std::vector<int>& p) {
    require_parking(p, "content");
    std::vector<int> alpha(p.size(), 0);
    for (int x : p) ++alpha[x - 1];
    return alpha;
}

inline Partition shape(const std::vector<int>& p) {
    auto alpha = content(p);
    std::vector<int> parts;
    for (int a : alpha)
        if (a > 0) parts.push_back(a);
    return Partition::from_multiset(parts);
}

// area(p) = binom(n+1, 2) - sum(p); always in [0, n(n-1)/2]
inline int area(const std::vector<int>& p) {
    require_parking(p, "area");
    const int n = static_cast<int>(p.size());
    int a = n * (n + 1) / 2;
    for (int x : p) a -= x;
    return a;
}

namespace detail {

// Lexicographic DFS over entries.  A prefix with value-counts c and r slots
// left extends to a parking function iff sum_{u<=v} c_u + r >= v for all v.
template <typename Fn>
void pf_rec(int n, std::vector<int>& word, std::vector<int>& count, Fn& fn) {
    const int k = static_cast<int>(word.size());
    if (k == n) {
        fn(const_cast<const std::vector<int>&>(word));
        return;
    }
    for (int v = 1; v <= n; ++v) {
        ++count[v];
        int below = 0;
        bool ok = true;
        const int r = n - k - 1;
        for (int u = 1; u <= n; ++u) {
            below += count[u];
            if (below + r < u) {
                ok = false;
                break;
            }
        }
        if (ok) {
            word.push_back(v);
            pf_rec(n, word, count, fn);
            word.pop_back();
        }
        --count[v];
    }
}

} // namespace detail

template <typename Fn>
void for_each_pf(int n, Fn&& fn) {
    if (n < 1) throw std::invalid_argument("for_each_pf: n < 1");
    std::vector<int> word, count(n + 1, 0);
    word.reserve(n);
    detail::pf_rec(n, word, count, fn);
}

inline std::vector<std::vector<int>> enumerate_pf(int n) {
    std::vector<std::vector<int>> out;
    for_each_pf(n, [&](const std::vector<int>& p) { out.push_back(p); });
    return out;
}

// Weakly increasing words with word[i] <= i+1, in lexicographic order.
template <typename Fn>
void for_each_sorted_pf(int n, Fn&& fn) {
    if (n < 1) throw std::invalid_argument("for_each_sorted_pf: n < 1");
    std::vector<int> word;
    word.reserve(n);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            fn(const_cast<const std::vector<int>&>(word));
            return;
        }
        const int lo = i == 0 ? 1 : word.back();
        for (int v = lo; v <= i + 1; ++v) {
            word.push_back(v);
            self(self, i + 1);
            word.pop_back();
        }
    };
    rec(rec, 0);
}

inline std::vector<std::vector<int>> enumerate_sorted_pf(int n) {
    std::vector<std::vector<int>> out;
    for_each_sorted_pf(n, [&](const std::vector<int>& p) { out.push_back(p); });
    return out;
}

// A naive shifted parking function is a pair (p, sigma) with sigma in
// {-1,+1}^n.  Its sort keeps only the parity of the signs over each fiber
// p^{-1}(k): sbar_k = prod_{p_i = k} sigma_i, and sbar_k = 0 when the fiber
// is empty.
struct SortedNaiveShifted {
    std::vector<int> p;    // weakly increasing parking function
    std::vector<int> sbar; // indexed by value k = 1..n, entries in {-1,0,+1}

    friend bool operator==(const SortedNaiveShifted&, const SortedNaiveShifted&) = default;
    friend bool operator<(const SortedNaiveShifted& a, const SortedNaiveShifted& b) {
        return std::tie(a.p, a.sbar) < std::tie(b.p, b.sbar);
    }
};

inline SortedNaiveShifted sort_naive(const std::vector<int>& p, const std::vector<int>& sigma) {
    require_parking(p, "sort_naive");
    if (sigma.size() != p.size()) throw std::invalid_argument("sort_naive: length mismatch");
    const int n = static_cast<int>(p.size());
    std::vector<int> sbar(n, 0);
    for (int i = 0; i < n; ++i) {
        if (sigma[i] != 1 && sigma[i] != -1)
            throw std::invalid_argument("sort_naive: sign entries must be +-1");
        int& s = sbar[p[i] - 1];
        s = (s == 0) ? sigma[i] : s * sigma[i];
    }
    std::vector<int> sp(p);
    std::sort(sp.begin(), sp.end());
    return {std::move(sp), std::move(sbar)};
}

// Every sorted parking function in lex order, each with all sign patterns on
// its occupied values (+1 before -1, last occupied value varying fastest).
template <typename Fn>
void for_each_sorted_naive(int n, Fn&& fn) {
    for_each_sorted_pf(n, [&](const std::vector<int>& p) {
        std::vector<int> occupied;
        std::vector<int> alpha(n, 0);
        for (int x : p) ++alpha[x - 1];
        for (int k = 0; k < n; ++k)
            if (alpha[k] > 0) occupied.push_back(k);
        const int l = static_cast<int>(occupied.size());
        for (unsigned long mask = 0; mask < (1ul << l); ++mask) {
            SortedNaiveShifted x{p, std::vector<int>(n, 0)};
            for (int j = 0; j < l; ++j)
                x.sbar[occupied[j]] = (mask >> (l - 1 - j)) & 1 ? -1 : 1;
            fn(const_cast<const SortedNaiveShifted&>(x));
        }
    });
}

inline std::vector<SortedNaiveShifted> enumerate_sorted_naive(int n) {
    std::vector<SortedNaiveShifted> out;
    for_each_sorted_naive(n, [&](const SortedNaiveShifted& x) { out.push_back(x); });
    return out;
}

// Schroeder path from (0,0) to (n,n) staying weakly above the diagonal,
// written as a string over U = (0,1), R = (1,0), D = (1,1).
inline bool is_schroeder_path(const std::string& steps, int n) {
    int x = 0, y = 0;
    for (char c : steps) {
        if (c == 'U')
            ++y;
        else if (c == 'R')
            ++x;
        else if (c == 'D')
            ++x, ++y;
        else
            return false;
        if (y < x) return false;
    }
    return x == n && y == n;
}

// Value k contributes alpha_k up-steps then a right-step, except that a
// negative sbar_k trades the last up-step for a diagonal.
inline std::string to_schroeder_path(const SortedNaiveShifted& x) {
    const int n = static_cast<int>(x.p.size());
    require_parking(x.p, "to_schroeder_path");
    std::vector<int> alpha(n, 0);
    for (int v : x.p) ++alpha[v - 1];
    std::string steps;
    for (int k = 0; k < n; ++k) {
        if ((x.sbar[k] == 0) != (alpha[k] == 0))
            throw std::invalid_argument("to_schroeder_path: sbar support mismatch");
        if (x.sbar[k] == -1) {
            steps.append(alpha[k] - 1, 'U');
            steps.push_back('D');
        } else {
            steps.append(alpha[k], 'U');
            steps.push_back('R');
        }
    }
    return steps;
}

inline SortedNaiveShifted from_schroeder_path(const std::string& steps, int n) {
    if (!is_schroeder_path(steps, n)) throw std::invalid_argument("from_schroeder_path: bad path");
    std::vector<int> alpha(n, 0), sbar(n, 0);
    int k = 0, ups = 0;
    for (char c : steps) {
        if (c == 'U') {
            ++ups;
        } else if (c == 'R') {
            alpha[k] = ups;
            sbar[k] = ups > 0 ? 1 : 0;
            ++k;
            ups = 0;
        } else {
            alpha[k] = ups + 1;
            sbar[k] = -1;
            ++k;
            ups = 0;
        }
    }
    std::vector<int> p;
    for (int v = 0; v < n; ++v) p.insert(p.end(), alpha[v], v + 1);
    return {std::move(p), std::move(sbar)};
}

template <typename Fn>
void for_each_schroeder_path(int n, Fn&& fn) {
    std::string steps;
    auto rec = [&](auto&& self, int x, int y) -> void {
        if (x == n && y == n) {
            fn(const_cast<const std::string&>(steps));
            return;
        }
        if (y < n) {
            steps.push_back('U');
            self(self, x, y + 1);
            steps.pop_back();
        }
        if (x < y) {
            steps.push_back('R');
            self(self, x + 1, y);
            steps.pop_back();
        }
        if (x < n && y < n) {
            steps.push_back('D');
            self(self, x + 1, y + 1);
            steps.pop_back();
        }
    };
    rec(rec, 0, 0);
}

} // namespace shpf
