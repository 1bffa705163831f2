#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "shpf/characters.hpp"
#include "shpf/clifford.hpp"
#include "shpf/parking.hpp"
#include "shpf/serialize.hpp"
#include "shpf/shifted.hpp"
#include "shpf/symfunc.hpp"
#include "shpf/tgraded.hpp"

namespace shpf {

struct CheckResult {
    std::string suite;
    std::string claim;
    int n = 0;
    bool pass = false;
    std::string detail; // empty on pass, counterexample on failure
};

namespace detail {

inline void record(std::vector<CheckResult>& out, const std::string& suite,
                   const std::string& claim, int n, bool pass, std::string detail = "") {
    out.push_back({suite, claim, n, pass, pass ? "" : std::move(detail)});
}

inline SymFunc random_sym(int degree, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    SymFunc f(degree);
    for (const auto& lam : partitions_of(degree))
        f.add_term(lam, make_rational(num(rng), den(rng)));
    return f;
}

inline std::string two_sides(const std::string& lhs, const std::string& rhs) {
    return "lhs = " + lhs + "; rhs = " + rhs;
}

} // namespace detail

inline std::vector<CheckResult> verify_identities(int max_n) {
    std::vector<CheckResult> out;
    const std::string s = "identities";

    for (int k = 1; k <= max_n; ++k)
        detail::record(out, s, "P_k definitions agree (half-doubled h_k vs recursion)", k,
                       p_def_forms(k));

    for (int k = 1; k <= std::min(max_n, 6); ++k)
        detail::record(out, s, "P_k quadratic relation over even splits", k,
                       p_relation_check(k));

    for (int d = 1; d <= std::min(max_n, 6); ++d) {
        std::mt19937 rng(7000 + d);
        bool ok = true;
        std::string why;
        for (int trial = 0; trial < 40 && ok; ++trial) {
            SymFunc f = detail::random_sym(d, rng), g = detail::random_sym(d, rng);
            if (hall_inner(shift(f), g) != hall_inner(f, shift(g))) {
                ok = false;
                why = detail::two_sides(f.to_string(), g.to_string());
            }
        }
        detail::record(out, s, "doubling map is self-adjoint (random pairs)", d, ok, why);
    }

    for (int n = 1; n <= std::min(max_n, 7); ++n) {
        bool ok = true;
        std::string why;
        for (const auto& lam : partitions_of(n)) {
            if (kronecker(h_prod(lam), scale(2, big_p(n))) != shift(h_prod(lam))) {
                ok = false;
                why = "h_" + lam.to_string();
                break;
            }
        }
        detail::record(out, s, "doubling map is Kronecker product with 2*P_n", n, ok, why);
    }

    for (int n = 1; n <= std::min(max_n, 9); ++n) {
        auto coeffs = expand_odd_v(sh_symfunc(n));
        bool ok = true;
        std::string why;
        for (const auto& [lam, c] : coeffs)
            if (c != Rational(okrew(lam))) {
                ok = false;
                why = lam.to_string() + ": " +
                      detail::two_sides(to_string(c), okrew(lam).get_str());
                break;
            }
        detail::record(out, s, "odd V expansion of the shifted sum has Okrew coefficients",
                       n, ok, why);
    }

    for (int n = 1; n <= std::min(max_n, 8); ++n) {
        SymFunc recon = sym_zero(n);
        for (const auto& [lam, c] : naive_v_expansion(n))
            recon = add(recon, scale(c, v_func(lam)));
        bool ok = recon == sh_symfunc(n);
        detail::record(out, s, "naive V expansion reconstructs the shifted sum", n, ok,
                       ok ? "" : detail::two_sides(recon.to_string(), sh_symfunc(n).to_string()));
    }

    for (int n = 1; n <= std::min(max_n, 6); ++n) {
        auto [naive, odd] = t_graded(n);
        bool agree = naive == odd;
        detail::record(out, s, "graded sums from naive and odd enumerations agree", n, agree,
                       agree ? "" : detail::two_sides(naive.to_string(), odd.to_string()));
        bool at_one = naive.evaluate(Rational(1)) == sh_symfunc(n);
        detail::record(out, s, "graded sum specializes to the shifted sum at t=1", n, at_one,
                       at_one ? "" : naive.to_string());
    }

    for (int n = 1; n <= std::min(max_n, 12); ++n) {
        bool ok = true;
        std::string why;
        for (const auto& lam : partitions_of(n))
            if (lam.is_odd() && !okrew_ratio_check(lam)) {
                ok = false;
                why = lam.to_string();
                break;
            }
        detail::record(out, s, "Okrew matches Krew times the binomial ratio", n, ok, why);
    }

    for (int n = 1; n <= std::min(max_n, 8); ++n) {
        Integer dim = 0;
        Partition ones(std::vector<int>(n, 1));
        for (const auto& lam : partitions_of(n)) {
            if (!lam.is_odd()) continue;
            Rational c = v_func(lam).coeff(ones);
            dim += okrew(lam) * Integer(c * factorial(n));
        }
        Integer expect = pow2(n) * pow_int(n + 1, n - 1);
        bool ok = dim == expect;
        detail::record(out, s, "dimension audit: Okrew-weighted V dimensions", n, ok,
                       ok ? "" : detail::two_sides(dim.get_str(), expect.get_str()));
    }

    return out;
}

inline std::vector<CheckResult> verify_combinatorics(int max_n) {
    std::vector<CheckResult> out;
    const std::string s = "combinatorics";

    for (int n = 1; n <= std::min(max_n, 6); ++n) {
        auto count = Integer(enumerate_pf(n).size());
        Integer expect = pow_int(n + 1, n - 1);
        detail::record(out, s, "parking functions count (n+1)^(n-1)", n, count == expect,
                       detail::two_sides(count.get_str(), expect.get_str()));
    }

    for (int n = 1; n <= std::min(max_n, 10); ++n) {
        auto count = Integer(enumerate_sorted_pf(n).size());
        detail::record(out, s, "sorted parking functions are Catalan", n,
                       count == catalan(n),
                       detail::two_sides(count.get_str(), catalan(n).get_str()));
        Integer ksum = 0;
        for (const auto& lam : partitions_of(n)) ksum += krew(lam);
        detail::record(out, s, "Krew numbers sum to Catalan", n, ksum == catalan(n),
                       detail::two_sides(ksum.get_str(), catalan(n).get_str()));
    }

    for (int n = 1; n <= std::min(max_n, 8); ++n) {
        auto naive = Integer(enumerate_sorted_naive(n).size());
        detail::record(out, s, "sorted naive objects count large Schroeder", n,
                       naive == schroeder(n),
                       detail::two_sides(naive.get_str(), schroeder(n).get_str()));
        auto odd = Integer(enumerate_sorted_odd(n).size());
        detail::record(out, s, "sorted odd objects count large Schroeder", n,
                       odd == schroeder(n),
                       detail::two_sides(odd.get_str(), schroeder(n).get_str()));
    }

    for (int n = 1; n <= std::min(max_n, 7); ++n) {
        bool ok = true;
        std::string why;
        std::set<std::string> seen;
        for (const auto& x : enumerate_sorted_naive(n)) {
            auto path = to_schroeder_path(x);
            if (!is_schroeder_path(path, n) || !seen.insert(path).second ||
                !(from_schroeder_path(path, n) == x)) {
                ok = false;
                why = naive_to_json(x).dump() + " -> " + path;
                break;
            }
        }
        detail::record(out, s, "sorted naive objects biject with Schroeder paths", n, ok, why);
    }

    for (int n = 1; n <= std::min(max_n, 8); ++n) {
        bool ok = true;
        std::string why;
        for (const auto& x : enumerate_sorted_naive(n))
            if (is_garage(x) != is_garage_by_word(x)) {
                ok = false;
                why = naive_to_json(x).dump();
                break;
            }
        detail::record(out, s, "garage predicate agrees with the word criterion", n, ok, why);
    }

    for (int n = 1; n <= std::min(max_n, 6); ++n) {
        auto all = enumerate_sorted_naive(n);
        std::set<SortedNaiveShifted> pool(all.begin(), all.end());
        bool ok = true;
        std::string why;
        for (const auto& g : enumerate_garages(n)) {
            for (const auto& x : garage_class(g)) {
                if (!pool.erase(x)) {
                    ok = false;
                    why = "duplicate member " + naive_to_json(x).dump();
                }
                if (!(garage_of(x) == g)) {
                    ok = false;
                    why = naive_to_json(x).dump() + " not reduced to " + naive_to_json(g).dump();
                }
            }
        }
        if (!pool.empty() && ok) {
            ok = false;
            why = "uncovered member " + naive_to_json(*pool.begin()).dump();
        }
        detail::record(out, s, "garage classes partition the sorted naive objects", n, ok, why);

        auto odds = enumerate_sorted_odd(n);
        std::set<SortedOddShifted> opool(odds.begin(), odds.end());
        bool ook = true;
        std::string owhy;
        for (const auto& g : enumerate_garages(n))
            for (const auto& y : odd_class(g))
                if (!opool.erase(y)) {
                    ook = false;
                    owhy = "duplicate member " + odd_to_json(y).dump();
                }
        if (!opool.empty() && ook) {
            ook = false;
            owhy = "uncovered member " + odd_to_json(*opool.begin()).dump();
        }
        detail::record(out, s, "odd classes partition the sorted odd objects", n, ook, owhy);
    }

    for (int n = 1; n <= std::min(max_n, 7); ++n) {
        bool ok = true;
        std::string why;
        for (const auto& x : enumerate_sorted_naive(n)) {
            auto y = naive_to_odd(x);
            if (!(odd_to_naive(y) == x) || area_o(y) != area(x.p)) {
                ok = false;
                why = naive_to_json(x).dump() + " -> " + odd_to_json(y).dump();
                break;
            }
        }
        for (const auto& y : enumerate_sorted_odd(n))
            if (!ok || !(naive_to_odd(odd_to_naive(y)) == y)) {
                if (ok) why = odd_to_json(y).dump();
                ok = false;
                break;
            }
        detail::record(out, s, "naive/odd bijection is inverse and area-preserving", n, ok, why);
    }

    for (int n = 1; n <= std::min(max_n, 8); ++n) {
        SymFunc odd_sum = sym_zero(n);
        bool shapes_ok = true;
        std::map<Partition, Integer> by_shape;
        for_each_sorted_odd(n, [&](const SortedOddShifted& y) { ++by_shape[shape(y.p)]; });
        for (const auto& [lam, cnt] : by_shape) {
            if (cnt != okrew(lam)) shapes_ok = false;
            odd_sum = add(odd_sum, scale(Rational(cnt), v_func(lam)));
        }
        bool ok = shapes_ok && odd_sum == sh_symfunc(n);
        detail::record(out, s, "odd shapes count Okrew and their V sum is the shifted sum",
                       n, ok, odd_sum.to_string());

        SymFunc r_sum = sym_zero(n);
        for (const auto& g : enumerate_garages(n)) r_sum = add(r_sum, r_func(shape(g.p)));
        bool rok = r_sum == sh_symfunc(n);
        detail::record(out, s, "garage R sum is the shifted sum", n, rok, r_sum.to_string());
    }

    for (int n = 1; n <= std::min(max_n, 6); ++n) {
        bool ok = true;
        std::string why;
        for (const auto& g : enumerate_garages(n)) {
            SymFunc vn = sym_zero(n), vo = sym_zero(n);
            for (const auto& x : garage_class(g)) vn = add(vn, v_func(shape(x.p)));
            for (const auto& y : odd_class(g)) vo = add(vo, v_func(shape(y.p)));
            const SymFunc& r = r_func(shape(g.p));
            if (vn != r || vo != r) {
                ok = false;
                why = "garage " + naive_to_json(g).dump();
                break;
            }
        }
        detail::record(out, s, "each garage fiber carries R on both sides", n, ok, why);
    }

    return out;
}

inline std::vector<CheckResult> verify_characters(int max_n, int brute_bound) {
    std::vector<CheckResult> out;
    const std::string s = "characters";

    for (int n = 1; n <= std::min(max_n, 8); ++n) {
        bool ok = frobenius(trivial_character(n)) == h(n) &&
                  frobenius(sign_character(n)) == e(n);
        detail::record(out, s, "trivial and sign characteristics are h_n and e_n", n, ok);
    }

    for (int n = 1; n <= std::min(max_n, 7); ++n) {
        bool ok = frobenius(pf_character(n)) == pf_symfunc(n);
        detail::record(out, s, "parking character characteristic matches the Krew sum", n, ok,
                       ok ? "" : frobenius(pf_character(n)).to_string());
        bool sok = frobenius(naive_character(n)) == sh_symfunc(n);
        detail::record(out, s, "signed parking characteristic is the shifted sum", n, sok,
                       sok ? "" : frobenius(naive_character(n)).to_string());
    }

    for (int n = 1; n <= std::min({max_n, brute_bound, 5}); ++n) {
        bool ok = true;
        std::string why;
        for (const auto& lam : partitions_of(n)) {
            auto w = class_representative(lam);
            Integer fixed = 0;
            for (const auto& p : enumerate_pf(n))
                if (w.apply(p) == p) ++fixed;
            if (fixed != pf_fixed_count(lam)) {
                ok = false;
                why = lam.to_string() + ": " +
                      detail::two_sides(fixed.get_str(), pf_fixed_count(lam).get_str());
                break;
            }
        }
        detail::record(out, s, "cycle-constant counting matches a full fixed-point scan",
                       n, ok, why);
    }

    for (int n = 1; n <= std::min({max_n, brute_bound, 5}); ++n) {
        bool classes_ok = true;
        std::string why;
        ClassFunction total(n, ClassFunction::Kind::Ordinary);
        for (const auto& lam : partitions_of(n)) total.set(lam, Sqrt2Rational(0));
        for (const auto& x : enumerate_sorted_naive(n)) {
            ClassFunction chi = class_character(x);
            if (frobenius(chi) != v_func(shape(x.p))) {
                classes_ok = false;
                why = naive_to_json(x).dump();
            }
            for (const auto& lam : partitions_of(n))
                total.set(lam, total.at(lam) + chi.at(lam));
        }
        detail::record(out, s, "class characters have characteristic V of the class shape",
                       n, classes_ok, why);
        bool add_ok = total == naive_character(n);
        detail::record(out, s, "class characters sum to the signed parking character", n,
                       add_ok);
    }

    for (int n = 1; n <= std::min(max_n, 6); ++n) {
        bool ok = true;
        std::string why;
        const auto& ext = exterior_character(n);
        for (const auto& lam : partitions_of(n)) {
            auto w = class_representative(lam);
            if (Sqrt2Rational(exterior_fixed_trace(w)) != ext.at(lam)) {
                ok = false;
                why = lam.to_string();
                break;
            }
        }
        detail::record(out, s, "exterior algebra trace is 2^(parts) on odd classes", n, ok,
                       why);
    }

    for (int n = 1; n <= std::min(max_n, 6); ++n) {
        auto ch = spin_characteristic_sqrt2(spin_naive_character(n));
        bool ok = true;
        std::string why;
        const SymFunc& sh = sh_symfunc(n);
        for (const auto& [lam, c] : sh.terms())
            if (auto it = ch.find(lam);
                it == ch.end() || !(it->second == pow2_half(n) * Sqrt2Rational(c))) {
                ok = false;
                why = lam.to_string();
                break;
            }
        if (ok && ch.size() != sh.terms().size()) {
            ok = false;
            why = "extra support";
        }
        detail::record(out, s,
                       "spin characteristic of the signed module is 2^(n/2) times the shifted sum",
                       n, ok, why);
    }

    return out;
}

inline std::vector<CheckResult> verify_clifford(int max_n) {
    std::vector<CheckResult> out;
    const std::string s = "clifford";

    for (int n = 2; n <= std::min(max_n, 7); ++n) {
        bool ok = true;
        std::string why;
        const CliffordElement minus_one = clifford_scale(Rational(-1), CliffordElement::basis(n, 0));
        for (int k = 1; k < n && ok; ++k) {
            auto sk = embed_generator(k, n);
            if (!(clifford_mul(sk, sk) == minus_one)) {
                ok = false;
                why = "square at k=" + std::to_string(k);
            }
            for (int j = k + 2; j < n && ok; ++j) {
                auto sj = embed_generator(j, n);
                if (!(clifford_mul(sk, sj) == -clifford_mul(sj, sk))) {
                    ok = false;
                    why = "far pair " + std::to_string(k) + "," + std::to_string(j);
                }
            }
            if (ok && k + 1 < n) {
                auto sk1 = embed_generator(k + 1, n);
                auto lhs = clifford_mul(clifford_mul(sk, sk1), sk);
                auto rhs = clifford_mul(clifford_mul(sk1, sk), sk1);
                if (!(lhs == rhs)) {
                    ok = false;
                    why = "braid at k=" + std::to_string(k);
                }
            }
        }
        detail::record(out, s, "transposition images satisfy the double cover relations", n,
                       ok, why);
    }

    for (int n = 1; n <= std::min(max_n, 5); ++n) {
        bool ok = true;
        std::string why;
        for (const auto& lam : partitions_of(n)) {
            if (!lam.is_odd()) continue;
            auto rep = embed_positive_rep(lam, n);
            auto w = class_representative(lam);
            for (int i = 1; i <= n && ok; ++i) {
                auto lhs = clifford_mul(rep, CliffordElement::generator(i, n));
                auto rhs = clifford_mul(CliffordElement::generator(w(i), n), rep);
                if (!(lhs == rhs || lhs == -rhs)) {
                    ok = false;
                    why = lam.to_string() + " at generator " + std::to_string(i);
                }
            }
        }
        detail::record(out, s, "representatives conjugate generators along the permutation",
                       n, ok, why);
    }

    for (int n = 1; n <= std::min(max_n, 8); ++n) {
        bool ok = true;
        std::string why;
        for (const auto& lam : partitions_of(n)) {
            if (!lam.is_odd()) continue;
            auto tr = trace_left_mul(embed_positive_rep(lam, n));
            int l = static_cast<int>(lam.parts().size());
            Sqrt2Rational expect = pow2_half(n + l);
            if (!(Sqrt2Rational(tr.a, tr.c) == expect) || tr.b != 0 || tr.d != 0) {
                ok = false;
                why = lam.to_string() + ": " + tr.to_string();
                break;
            }
        }
        detail::record(out, s, "representative traces are 2^((n+parts)/2)", n, ok, why);
    }

    for (int n = 1; n <= std::min(max_n, 8); ++n) {
        ClassFunction psi(n, ClassFunction::Kind::Spin);
        for (const auto& lam : partitions_of(n)) {
            if (!lam.is_odd()) continue;
            psi.set(lam, pow2_half(n + static_cast<int>(lam.parts().size())));
        }
        auto ch = spin_characteristic_sqrt2(psi);
        bool ok = true;
        std::string why;
        for (const auto& [lam, c] : big_p(n).terms())
            if (auto it = ch.find(lam);
                it == ch.end() || !(it->second == pow2_half(n + 2) * Sqrt2Rational(c))) {
                ok = false;
                why = lam.to_string();
                break;
            }
        if (ok && ch.size() != big_p(n).terms().size()) {
            ok = false;
            why = "extra support";
        }
        detail::record(out, s,
                       "Clifford module spin characteristic is 2^(n/2+1) times P_n", n, ok,
                       why);
    }

    return out;
}

inline std::vector<CheckResult> verify_all(int max_n, int brute_bound) {
    std::vector<CheckResult> out = verify_identities(max_n);
    auto append = [&](std::vector<CheckResult> part) {
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    };
    append(verify_combinatorics(max_n));
    append(verify_characters(max_n, brute_bound));
    append(verify_clifford(max_n));
    return out;
}

} // namespace shpf
