#include <catch2/catch_amalgamated.hpp>

#include "shpf/characters.hpp"
#include "shpf/counting.hpp"
#include "shpf/shifted.hpp"

using namespace shpf;

TEST_CASE("sqrt2 ring") {
    Sqrt2Rational one(1), r2 = Sqrt2Rational::sqrt2();
    CHECK(one.is_rational());
    CHECK_FALSE(r2.is_rational());
    CHECK((r2 * r2) == Sqrt2Rational(2));
    auto x = one + r2;
    CHECK((x * x) == Sqrt2Rational(Rational(3), Rational(2)));
    CHECK((x - x).is_zero());
    CHECK((-x) == Sqrt2Rational(Rational(-1), Rational(-1)));
    CHECK(x.to_string() == "1 + 1*sqrt(2)");
    CHECK(Sqrt2Rational(Rational(1, 2)).to_string() == "1/2");

    CHECK(pow2_half(0) == Sqrt2Rational(1));
    CHECK(pow2_half(1) == r2);
    CHECK(pow2_half(2) == Sqrt2Rational(2));
    CHECK(pow2_half(3) == Sqrt2Rational(Rational(0), Rational(2)));
    CHECK(pow2_half(-1) == Sqrt2Rational(Rational(0), Rational(1, 2)));
    CHECK(pow2_half(-2) == Sqrt2Rational(Rational(1, 2)));
    for (int k = -5; k <= 5; ++k) CHECK(pow2_half(k) * pow2_half(k) == Sqrt2Rational(pow2_half(2 * k)));
}

TEST_CASE("class function plumbing") {
    ClassFunction chi(3, ClassFunction::Kind::Ordinary);
    CHECK_FALSE(chi.has(Partition({3})));
    chi.set(Partition({3}), Rational(5));
    CHECK(chi.at(Partition({3})) == Sqrt2Rational(5));
    CHECK_THROWS_AS(chi.at(Partition({2, 1})), std::invalid_argument);
    CHECK_THROWS_AS(chi.set(Partition({2}), Rational(1)), std::invalid_argument);

    ClassFunction psi(4, ClassFunction::Kind::Spin);
    psi.set(Partition({3, 1}), Sqrt2Rational::sqrt2());
    CHECK_THROWS_AS(psi.set(Partition({2, 2}), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(frobenius(psi), std::invalid_argument);
    CHECK_THROWS_AS(spin_characteristic(chi), std::invalid_argument);
}

TEST_CASE("frobenius of standard characters") {
    for (int n = 1; n <= 8; ++n) {
        CHECK(frobenius(trivial_character(n)) == h(n));
        CHECK(frobenius(sign_character(n)) == e(n));
    }
    for (int n = 1; n <= 6; ++n)
        CHECK(frobenius(regular_character(n)) == p_monomial(Partition(std::vector<int>(n, 1))));

    // linearity at the value level
    ClassFunction mix(5, ClassFunction::Kind::Ordinary);
    for (const auto& lam : partitions_of(5))
        mix.set(lam, Rational(Rational(3) * trivial_character(5).at(lam).a -
                              Rational(2) * sign_character(5).at(lam).a));
    CHECK(frobenius(mix) == add(scale(3, h(5)), scale(-2, e(5))));

    for (int n = 1; n <= 7; ++n) CHECK(frobenius(pf_character(n)) == pf_symfunc(n));

    // multiplying by the doubled one-part P inside the Kronecker product
    // performs the shift on the image
    for (int n = 1; n <= 6; ++n) {
        std::vector<ClassFunction> chis{pf_character(n), trivial_character(n), sign_character(n)};
        for (const auto& chi : chis) {
            auto f = frobenius(chi);
            CHECK(kronecker(f, scale(2, big_p(n))) == shift(f));
        }
    }
}

TEST_CASE("parking fixed point counts") {
    for (int n = 1; n <= 8; ++n)
        CHECK(pf_fixed_count(Partition(std::vector<int>(n, 1))) ==
              pow_int(Integer(n + 1), n - 1));
    CHECK(pf_fixed_count(Partition({2})) == 1);
    CHECK(pf_fixed_count(Partition({2, 1})) == 4);
    CHECK(pf_fixed_count(Partition({3})) == 1);

    // full-scan oracle
    for (int n = 1; n <= 5; ++n) {
        auto all = enumerate_pf(n);
        for (const auto& lam : partitions_of(n)) {
            auto w = class_representative(lam);
            Integer count = 0;
            for (const auto& p : all)
                if (w.apply(p) == p) ++count;
            CHECK(pf_fixed_count(lam) == count);
        }
    }
}

TEST_CASE("naive character") {
    for (int n = 1; n <= 7; ++n) {
        auto chi = naive_character(n);
        CHECK(chi.at(Partition(std::vector<int>(n, 1))) ==
              Sqrt2Rational(Rational(pow2(n) * pow_int(Integer(n + 1), n - 1))));
        for (const auto& lam : partitions_of(n))
            if (!lam.is_odd()) CHECK(chi.at(lam) == Sqrt2Rational(0));
        CHECK(frobenius(chi) == sh_symfunc(n));
    }
    CHECK(frobenius(naive_character(2)) == scale(6, p_monomial(Partition({1, 1}))));
}

TEST_CASE("exterior character") {
    CHECK(exterior_character(2).at(Partition({1, 1})) == Sqrt2Rational(4));
    CHECK(exterior_character(2).at(Partition({2})) == Sqrt2Rational(0));
    CHECK(frobenius(exterior_character(4)) == scale(2, big_p(4)));

    for (int n = 1; n <= 6; ++n) {
        auto chi = exterior_character(n);
        ClassFunction even(n, ClassFunction::Kind::Ordinary), odd(n, ClassFunction::Kind::Ordinary);
        for (const auto& lam : partitions_of(n)) {
            auto w = class_representative(lam);
            CHECK(chi.at(lam) == Sqrt2Rational(exterior_fixed_trace(w)));
            even.set(lam, exterior_fixed_trace(w, 0));
            odd.set(lam, exterior_fixed_trace(w, 1));
        }
        // the two graded halves carry the same character
        CHECK(frobenius(even) == big_p(n));
        CHECK(frobenius(odd) == big_p(n));
    }
}

TEST_CASE("signed trace oracle") {
    // the class of ((1,1),(+,0)) has two labels; the transposition fixes
    // both, with restricted signs +1 (no negatives) and -1 (both negative),
    // so the trace vanishes -- consistent with its character V_(2) = p_(1,1)
    auto members = class_members({{1, 1}, {1, 0}});
    REQUIRE(members.size() == 2);
    CHECK(class_trace(members, Permutation({2, 1})) == 0);
    CHECK(class_trace(members, Permutation::identity(2)) == 2);
    CHECK(frobenius(class_character({{1, 1}, {1, 0}})) == v_func(Partition({2})));
    CHECK(frobenius(class_character({{1, 2}, {1, -1}})) == v_func(Partition({1, 1})));

    // half of the two-label class ((1,2),(+,-)) is not invariant
    std::vector<NaiveLabel> broken{{{1, 2}, {1, -1}}};
    CHECK_THROWS_AS(class_trace(broken, Permutation({2, 1})), std::invalid_argument);

    // identity trace = class size; trace additivity across all classes
    for (int n = 1; n <= 4; ++n) {
        std::map<Partition, Rational> totals;
        std::size_t label_count = 0;
        for_each_sorted_naive(n, [&](const SortedNaiveShifted& x) {
            auto mem = class_members(x);
            label_count += mem.size();
            CHECK(class_trace(mem, Permutation::identity(n)) == Rational(mem.size()));
            for (const auto& lam : partitions_of(n))
                totals[lam] += class_trace(mem, class_representative(lam), false);
        });
        CHECK(Integer(label_count) == pow2(n) * pow_int(Integer(n + 1), n - 1));
        for (const auto& lam : partitions_of(n))
            CHECK(Sqrt2Rational(totals[lam]) == naive_character(n).at(lam));
    }
}

TEST_CASE("class characters match V and garage fibers match R") {
    for (int n = 1; n <= 4; ++n) {
        for_each_sorted_naive(n, [&](const SortedNaiveShifted& x) {
            CHECK(frobenius(class_character(x)) == v_func(shape(x.p)));
        });
        for_each_garage(n, [&](const SortedNaiveShifted& g) {
            SymFunc from_naive(n), from_odd(n);
            for (const auto& x : garage_class(g))
                from_naive = add(from_naive, frobenius(class_character(x)));
            for (const auto& y : odd_class(g))
                from_odd = add(from_odd, frobenius(class_character({y.p, y.sbar})));
            CHECK(from_naive == r_func(shape(g.p)));
            CHECK(from_odd == r_func(shape(g.p)));
        });
    }
    // the one-value garage on four cars carries R_(4) = P_2 P_2 + P_4
    SymFunc sum(4);
    for (const auto& x : garage_class({{1, 1, 1, 1}, {1, 0, 0, 0}}))
        sum = add(sum, frobenius(class_character(x)));
    CHECK(sum == add(mul(big_p(2), big_p(2)), big_p(4)));
    CHECK(sum == r_func(Partition({4})));
}

TEST_CASE("spin characteristic") {
    ClassFunction zero(4, ClassFunction::Kind::Spin);
    for (const auto& lam : partitions_of(4, PartitionFilter::Odd)) zero.set(lam, Rational(0));
    CHECK(spin_characteristic(zero).is_zero());

    // Clifford regular character 2^((n+l)/2) on odd classes
    for (int n = 2; n <= 6; n += 2) {
        ClassFunction psi(n, ClassFunction::Kind::Spin);
        for (const auto& lam : partitions_of(n, PartitionFilter::Odd))
            psi.set(lam, Rational(pow2((n + static_cast<int>(lam.length())) / 2)));
        CHECK(spin_characteristic(psi) == scale(pow2(n / 2 + 1), big_p(n)));
    }

    // signed parking modules: parking factor times the Clifford factor
    CHECK(spin_naive_character(2).at(Partition({1, 1})) == Sqrt2Rational(12));
    for (int n = 2; n <= 6; n += 2)
        CHECK(spin_characteristic(spin_naive_character(n)) ==
              scale(pow2(n / 2), sh_symfunc(n)));
    for (int n = 1; n <= 5; n += 2) {
        auto psi = spin_naive_character(n);
        CHECK_THROWS_AS(spin_characteristic(psi), std::domain_error);
        auto coeffs = spin_characteristic_sqrt2(psi);
        auto sh = sh_symfunc(n);
        CHECK(coeffs.size() == sh.terms().size());
        for (const auto& [lam, c] : sh.terms())
            CHECK(coeffs.at(lam) == pow2_half(n) * Sqrt2Rational(c));
    }
    CHECK(spin_characteristic_sqrt2(spin_naive_character(1)).at(Partition({1})) ==
          Sqrt2Rational(Rational(0), Rational(2)));
}
