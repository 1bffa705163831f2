#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "shpf/parking.hpp"

namespace shpf {

// upsilon_i records the parity class of the fiber over value i:
// 0 = empty, 1 = odd, 2 = positive even.
inline std::vector<int> upsilon(const SortedNaiveShifted& x) {
    const int n = static_cast<int>(x.p.size());
    std::vector<int> alpha(n, 0), out(n, 0);
    for (int v : x.p) ++alpha[v - 1];
    for (int i = 0; i < n; ++i) out[i] = alpha[i] == 0 ? 0 : (alpha[i] % 2 ? 1 : 2);
    return out;
}

enum class Step { Up, Right, DiagPos, DiagNeg };

struct MatchingPath {
    std::vector<Step> steps;

    friend bool operator==(const MatchingPath&, const MatchingPath&) = default;
};

inline char step_char(Step s) {
    switch (s) {
        case Step::Up: return 'U';
        case Step::Right: return 'R';
        case Step::DiagPos: return 'P';
        default: return 'N';
    }
}

inline std::string to_string(const MatchingPath& path) {
    std::string out;
    for (Step s : path.steps) out.push_back(step_char(s));
    return out;
}

inline MatchingPath path_from_string(const std::string& s) {
    MatchingPath out;
    for (char c : s) {
        switch (c) {
            case 'U': out.steps.push_back(Step::Up); break;
            case 'R': out.steps.push_back(Step::Right); break;
            case 'P': out.steps.push_back(Step::DiagPos); break;
            case 'N': out.steps.push_back(Step::DiagNeg); break;
            default: throw std::invalid_argument("path_from_string: bad step letter");
        }
    }
    return out;
}

// One step per value i.  Occupied even values step by their sign; odd values
// step diagonally; empty values head for the diagonal (Up from below y > x...
// i.e. x > y, Right from above, and a negative diagonal step on it).
inline MatchingPath matching_path(const SortedNaiveShifted& x) {
    auto ups = upsilon(x);
    MatchingPath out;
    int d = 0; // x - y of the current position; d > 0 is below the diagonal
    for (std::size_t i = 0; i < ups.size(); ++i) {
        Step s;
        if (ups[i] == 2) {
            s = x.sbar[i] == 1 ? Step::Up : Step::Right;
        } else if (ups[i] == 1) {
            s = Step::DiagPos;
        } else {
            s = d > 0 ? Step::Up : (d < 0 ? Step::Right : Step::DiagNeg);
        }
        out.steps.push_back(s);
        if (s == Step::Up)
            --d;
        else if (s == Step::Right)
            ++d;
    }
    return out;
}

// Arcs (i, k), 1-based step indices, i < k, canonically ordered.
using Matching = std::vector<std::pair<int, int>>;

// Steps i and k are matched when they cross the same diagonal line
// x - y = m - 1/2 and no step between them does.  Crossings of a fixed line
// alternate away/toward, so nearest-unmatched pairing via one stack per line
// is exact.  An Up step from offset d crosses line d - 1/2; a Right step
// crosses d + 1/2.  Line m - 1/2 is keyed by m.
inline Matching path_matching(const MatchingPath& path) {
    std::map<int, std::vector<int>> open;
    Matching arcs;
    int d = 0;
    for (int i = 1; i <= static_cast<int>(path.steps.size()); ++i) {
        Step s = path.steps[i - 1];
        if (s == Step::Up || s == Step::Right) {
            const int band = s == Step::Up ? d : d + 1;
            const bool away = s == Step::Up ? d <= 0 : d >= 0;
            if (away) {
                open[band].push_back(i);
            } else {
                auto& stack = open[band];
                if (stack.empty()) throw std::logic_error("path_matching: unopened crossing");
                arcs.emplace_back(stack.back(), i);
                stack.pop_back();
            }
            d += s == Step::Up ? -1 : 1;
        }
    }
    std::sort(arcs.begin(), arcs.end());
    return arcs;
}

inline Matching auxiliary_matching(const SortedNaiveShifted& x) {
    return path_matching(matching_path(x));
}

// Normative garage test: every matched right endpoint sits over an empty
// value, i.e. each step toward the diagonal has upsilon 0.
inline bool is_garage(const SortedNaiveShifted& x) {
    auto ups = upsilon(x);
    for (const auto& [i, k] : auxiliary_matching(x))
        if (ups[k - 1] != 0) return false;
    return true;
}

// Word form of the same test: whenever the word strictly between two 2's is
// balanced with every prefix having at least as many 2's as 0's, the signs at
// the two 2's must agree.  Must coincide with is_garage; kept separate so the
// agreement is testable.
inline bool is_garage_by_word(const SortedNaiveShifted& x) {
    auto ups = upsilon(x);
    const int n = static_cast<int>(ups.size());
    for (int i = 0; i < n; ++i) {
        if (ups[i] != 2) continue;
        for (int j = i + 1; j < n; ++j) {
            if (ups[j] != 2) continue;
            int twos = 0, zeros = 0;
            bool balanced = true;
            for (int t = i + 1; t < j && balanced; ++t) {
                twos += ups[t] == 2;
                zeros += ups[t] == 0;
                if (zeros > twos) balanced = false;
            }
            if (balanced && twos == zeros && x.sbar[i] != x.sbar[j]) return false;
        }
    }
    return true;
}

namespace detail {

inline std::vector<int> content_of_sorted(const std::vector<int>& p) {
    std::vector<int> alpha(p.size(), 0);
    for (int v : p) ++alpha[v - 1];
    return alpha;
}

inline std::vector<int> word_from_content(const std::vector<int>& alpha) {
    std::vector<int> p;
    for (std::size_t v = 0; v < alpha.size(); ++v) p.insert(p.end(), alpha[v], static_cast<int>(v) + 1);
    return p;
}

} // namespace detail

// Collapse each arc of the auxiliary matching by parking all of its cars at
// the left endpoint.  The result is the unique garage-equivalent garage.
inline SortedNaiveShifted garage_of(const SortedNaiveShifted& x) {
    auto alpha = detail::content_of_sorted(x.p);
    auto sbar = x.sbar;
    for (const auto& [i, k] : auxiliary_matching(x)) {
        alpha[i - 1] += alpha[k - 1];
        alpha[k - 1] = 0;
        sbar[k - 1] = 0;
    }
    return {detail::word_from_content(alpha), std::move(sbar)};
}

// All sorted naive shifted parking functions garage-equivalent to g: per arc
// (i, k) carrying 2l cars, park 2j of them at i and the rest at k, j in [l].
inline std::vector<SortedNaiveShifted> garage_class(const SortedNaiveShifted& g) {
    if (!is_garage(g)) throw std::invalid_argument("garage_class: input is not a garage");
    auto arcs = auxiliary_matching(g);
    auto alpha0 = detail::content_of_sorted(g.p);
    std::vector<SortedNaiveShifted> out;
    std::vector<int> choice(arcs.size(), 1);
    auto emit = [&]() {
        auto alpha = alpha0;
        auto sbar = g.sbar;
        for (std::size_t a = 0; a < arcs.size(); ++a) {
            const auto [i, k] = arcs[a];
            const int l = alpha0[i - 1] / 2, j = choice[a];
            alpha[i - 1] = 2 * j;
            alpha[k - 1] = 2 * (l - j);
            sbar[k - 1] = j == l ? 0 : -g.sbar[i - 1];
        }
        out.push_back({detail::word_from_content(alpha), std::move(sbar)});
    };
    auto rec = [&](auto&& self, std::size_t a) -> void {
        if (a == arcs.size()) {
            emit();
            return;
        }
        const int l = alpha0[arcs[a].first - 1] / 2;
        for (int j = 1; j <= l; ++j) {
            choice[a] = j;
            self(self, a + 1);
        }
    };
    rec(rec, 0);
    return out;
}

template <typename Fn>
void for_each_garage(int n, Fn&& fn) {
    for_each_sorted_naive(n, [&](const SortedNaiveShifted& x) {
        if (is_garage(x)) fn(x);
    });
}

inline std::vector<SortedNaiveShifted> enumerate_garages(int n) {
    std::vector<SortedNaiveShifted> out;
    for_each_garage(n, [&](const SortedNaiveShifted& x) { out.push_back(x); });
    return out;
}

// Sorted odd shifted parking function: sorted parking function of odd shape,
// reduced signs, and a noncrossing matching on its values subject to the
// sign/occupancy/nesting rules checked by is_odd_shifted.
struct SortedOddShifted {
    std::vector<int> p;
    std::vector<int> sbar;
    Matching tau;

    friend bool operator==(const SortedOddShifted&, const SortedOddShifted&) = default;
    friend bool operator<(const SortedOddShifted& a, const SortedOddShifted& b) {
        return std::tie(a.p, a.sbar, a.tau) < std::tie(b.p, b.sbar, b.tau);
    }
};

struct OddShifted {
    std::vector<int> p;
    std::vector<int> sigma;
    Matching tau;
};

namespace detail {

// structural validation of a matching over values appearing in p
inline void require_matching(const Matching& tau, const std::vector<int>& alpha, const char* who) {
    const int n = static_cast<int>(alpha.size());
    std::vector<bool> used(n + 1, false);
    for (const auto& [a, b] : tau) {
        if (a < 1 || b < 1 || a > n || b > n || a >= b)
            throw std::invalid_argument(std::string(who) + ": bad arc endpoints");
        if (used[a] || used[b]) throw std::invalid_argument(std::string(who) + ": repeated endpoint");
        used[a] = used[b] = true;
        if (alpha[a - 1] == 0 || alpha[b - 1] == 0)
            throw std::invalid_argument(std::string(who) + ": arc endpoint not a value of p");
    }
    for (const auto& [a, d] : tau)
        for (const auto& [b, c] : tau)
            if (a < b && b <= d && d < c)
                throw std::invalid_argument(std::string(who) + ": crossing arcs");
}

} // namespace detail

// Definition conditions on a well-formed triple: odd shape; arcs carry
// opposite signs; no gaps strictly inside an arc; nested arcs open with equal
// signs.
inline bool is_odd_shifted(const SortedOddShifted& x) {
    const int n = static_cast<int>(x.p.size());
    require_parking(x.p, "is_odd_shifted");
    if (!std::is_sorted(x.p.begin(), x.p.end()))
        throw std::invalid_argument("is_odd_shifted: p not sorted");
    if (static_cast<int>(x.sbar.size()) != n) throw std::invalid_argument("is_odd_shifted: sbar length");
    auto alpha = detail::content_of_sorted(x.p);
    for (int k = 0; k < n; ++k) {
        if (x.sbar[k] != 0 && x.sbar[k] != 1 && x.sbar[k] != -1)
            throw std::invalid_argument("is_odd_shifted: sbar entries must be in {-1,0,1}");
        if ((x.sbar[k] == 0) != (alpha[k] == 0))
            throw std::invalid_argument("is_odd_shifted: sbar support mismatch");
    }
    detail::require_matching(x.tau, alpha, "is_odd_shifted");

    for (int a : alpha)
        if (a % 2 == 0 && a != 0) return false;
    for (const auto& [a, b] : x.tau) {
        if (x.sbar[a - 1] != -x.sbar[b - 1]) return false;
        for (int v = a + 1; v < b; ++v)
            if (alpha[v - 1] == 0) return false;
    }
    for (const auto& [a, d] : x.tau)
        for (const auto& [b, c] : x.tau)
            if (a < b && c < d && x.sbar[a - 1] != x.sbar[b - 1]) return false;
    return true;
}

inline bool is_odd_shifted(const std::vector<int>& p, const std::vector<int>& sigma, const Matching& tau) {
    auto sorted = sort_naive(p, sigma);
    Matching canon = tau;
    std::sort(canon.begin(), canon.end());
    return is_odd_shifted(SortedOddShifted{std::move(sorted.p), std::move(sorted.sbar), std::move(canon)});
}

// All sorted odd shifted parking functions, built constructively: for each
// sorted parking function of odd shape, each noncrossing matching confined to
// runs of consecutive occupied values, then one free sign per unmatched value
// and per outermost arc (nested arcs inherit the sign of their root).
template <typename Fn>
void for_each_sorted_odd(int n, Fn&& fn) {
    for_each_sorted_pf(n, [&](const std::vector<int>& p) {
        auto alpha = detail::content_of_sorted(p);
        for (int a : alpha)
            if (a % 2 == 0 && a != 0) return;

        std::vector<std::pair<int, int>> runs; // [lo, hi] of consecutive occupied values
        for (int v = 1; v <= n; ++v) {
            if (alpha[v - 1] == 0) continue;
            if (!runs.empty() && runs.back().second == v - 1)
                runs.back().second = v;
            else
                runs.emplace_back(v, v);
        }

        // noncrossing partial matchings of the segment [lo, hi]
        auto matchings = [&](auto&& self, int lo, int hi) -> std::vector<Matching> {
            if (lo > hi) return {{}};
            std::vector<Matching> out;
            for (const auto& rest : self(self, lo + 1, hi)) out.push_back(rest);
            for (int b = lo + 1; b <= hi; ++b)
                for (const auto& inner : self(self, lo + 1, b - 1))
                    for (const auto& outer : self(self, b + 1, hi)) {
                        Matching m{{lo, b}};
                        m.insert(m.end(), inner.begin(), inner.end());
                        m.insert(m.end(), outer.begin(), outer.end());
                        out.push_back(std::move(m));
                    }
            return out;
        };

        std::vector<std::vector<Matching>> per_run;
        for (const auto& [lo, hi] : runs) per_run.push_back(matchings(matchings, lo, hi));

        Matching tau;
        auto over_taus = [&](auto&& self, std::size_t r) -> void {
            if (r == per_run.size()) {
                Matching canon = tau;
                std::sort(canon.begin(), canon.end());
                // free-sign slots: unmatched occupied values and root arcs
                std::vector<bool> matched(n + 1, false);
                for (const auto& [a, b] : canon) matched[a] = matched[b] = true;
                std::vector<int> root_of(canon.size());
                for (std::size_t t = 0; t < canon.size(); ++t) {
                    root_of[t] = static_cast<int>(t);
                    for (std::size_t s = 0; s < canon.size(); ++s)
                        if (canon[s].first < canon[t].first && canon[t].second < canon[s].second &&
                            (root_of[t] == static_cast<int>(t) ||
                             canon[s].first > canon[root_of[t]].first))
                            root_of[t] = static_cast<int>(s);
                }
                // chase to the outermost ancestor
                for (std::size_t t = 0; t < canon.size(); ++t) {
                    int r2 = root_of[t];
                    while (root_of[r2] != r2) r2 = root_of[r2];
                    root_of[t] = r2;
                }
                std::vector<int> slots; // slot position: value for unmatched, left endpoint for roots
                for (int v = 1; v <= n; ++v)
                    if (alpha[v - 1] > 0 && !matched[v]) slots.push_back(v);
                std::vector<int> root_slot(canon.size(), -1);
                for (std::size_t t = 0; t < canon.size(); ++t)
                    if (root_of[t] == static_cast<int>(t)) {
                        root_slot[t] = static_cast<int>(slots.size());
                        slots.push_back(canon[t].first);
                    }
                std::vector<std::size_t> order(slots.size());
                std::iota(order.begin(), order.end(), 0);
                std::sort(order.begin(), order.end(),
                          [&](std::size_t a, std::size_t b) { return slots[a] < slots[b]; });

                for (unsigned long mask = 0; mask < (1ul << slots.size()); ++mask) {
                    std::vector<int> sign(slots.size());
                    for (std::size_t s = 0; s < slots.size(); ++s)
                        sign[order[s]] = (mask >> (slots.size() - 1 - s)) & 1 ? -1 : 1;
                    std::vector<int> sbar(n, 0);
                    std::size_t u = 0;
                    for (int v = 1; v <= n; ++v)
                        if (alpha[v - 1] > 0 && !matched[v]) sbar[v - 1] = sign[u++];
                    for (std::size_t t = 0; t < canon.size(); ++t) {
                        const int s = sign[root_slot[root_of[t]]];
                        sbar[canon[t].first - 1] = s;
                        sbar[canon[t].second - 1] = -s;
                    }
                    fn(SortedOddShifted{p, std::move(sbar), canon});
                }
                return;
            }
            for (const auto& m : per_run[r]) {
                const std::size_t before = tau.size();
                tau.insert(tau.end(), m.begin(), m.end());
                self(self, r + 1);
                tau.resize(before);
            }
        };
        over_taus(over_taus, 0);
    });
}

inline std::vector<SortedOddShifted> enumerate_sorted_odd(int n) {
    std::vector<SortedOddShifted> out;
    for_each_sorted_odd(n, [&](const SortedOddShifted& x) { out.push_back(x); });
    return out;
}

// Rewrite every right endpoint of tau to its left endpoint.  Sends odd
// shifted parking functions onto garages.
inline SortedNaiveShifted phi_o(const SortedOddShifted& x) {
    auto alpha = detail::content_of_sorted(x.p);
    auto sbar = x.sbar;
    for (const auto& [a, b] : x.tau) {
        alpha[a - 1] += alpha[b - 1];
        alpha[b - 1] = 0;
        sbar[b - 1] = 0;
    }
    return {detail::word_from_content(alpha), std::move(sbar)};
}

inline SortedNaiveShifted phi_o(const OddShifted& x) {
    auto sorted = sort_naive(x.p, x.sigma);
    Matching canon = x.tau;
    std::sort(canon.begin(), canon.end());
    return phi_o(SortedOddShifted{std::move(sorted.p), std::move(sorted.sbar), std::move(canon)});
}

// Fiber of phi_o over a garage: per arc (i, k) holding 2m cars, park an odd
// number 2j - 1 at i and the other 2(m - j) + 1 at k, j in [m].
inline std::vector<SortedOddShifted> odd_class(const SortedNaiveShifted& g) {
    if (!is_garage(g)) throw std::invalid_argument("odd_class: input is not a garage");
    auto arcs = auxiliary_matching(g);
    auto alpha0 = detail::content_of_sorted(g.p);
    auto ups = upsilon(g);
    std::vector<bool> left(ups.size() + 1, false);
    for (const auto& [i, k] : arcs) left[i] = true;
    for (std::size_t v = 1; v <= ups.size(); ++v)
        if (ups[v - 1] == 2 && !left[v])
            throw std::logic_error("odd_class: even value not opened by the matching");

    std::vector<SortedOddShifted> out;
    std::vector<int> choice(arcs.size(), 1);
    auto emit = [&]() {
        auto alpha = alpha0;
        auto sbar = g.sbar;
        for (std::size_t a = 0; a < arcs.size(); ++a) {
            const auto [i, k] = arcs[a];
            const int m = alpha0[i - 1] / 2, j = choice[a];
            alpha[i - 1] = 2 * j - 1;
            alpha[k - 1] = 2 * (m - j) + 1;
            sbar[k - 1] = -g.sbar[i - 1];
        }
        out.push_back({detail::word_from_content(alpha), std::move(sbar), arcs});
    };
    auto rec = [&](auto&& self, std::size_t a) -> void {
        if (a == arcs.size()) {
            emit();
            return;
        }
        const int m = alpha0[arcs[a].first - 1] / 2;
        for (int j = 1; j <= m; ++j) {
            choice[a] = j;
            self(self, a + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// The bijection between sorted naive and sorted odd objects: move one car
// from each left endpoint to its right endpoint and flip the sign it lands
// with.
inline SortedOddShifted naive_to_odd(const SortedNaiveShifted& x) {
    auto arcs = auxiliary_matching(x);
    auto alpha = detail::content_of_sorted(x.p);
    auto sbar = x.sbar;
    for (const auto& [i, j] : arcs) {
        alpha[i - 1] -= 1;
        alpha[j - 1] += 1;
        sbar[j - 1] = -x.sbar[i - 1];
    }
    return {detail::word_from_content(alpha), std::move(sbar), std::move(arcs)};
}

inline SortedNaiveShifted odd_to_naive(const SortedOddShifted& x) {
    auto alpha = detail::content_of_sorted(x.p);
    auto sbar = x.sbar;
    for (const auto& [i, j] : x.tau) {
        alpha[i - 1] += 1;
        alpha[j - 1] -= 1;
        if (alpha[j - 1] == 0) sbar[j - 1] = 0;
    }
    return {detail::word_from_content(alpha), std::move(sbar)};
}

// area_o(p, sbar, tau) = area(p) + sum over arcs of their width
inline int area_o(const SortedOddShifted& x) {
    int out = area(x.p);
    for (const auto& [i, j] : x.tau) out += j - i;
    return out;
}

} // namespace shpf
