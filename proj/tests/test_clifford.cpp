#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "shpf/characters.hpp"
#include "shpf/clifford.hpp"
#include "shpf/counting.hpp"

using namespace shpf;

namespace {

CliffordElement random_element(int n, std::mt19937& rng) {
    std::uniform_int_distribution<unsigned long> mask(0, (1ul << n) - 1);
    std::uniform_int_distribution<int> small(-3, 3);
    CliffordElement out(n);
    for (int t = 0; t < 5; ++t)
        out.add_term(mask(rng), RingQI2(Rational(small(rng)), Rational(small(rng)),
                                        Rational(small(rng)), Rational(small(rng))));
    return out;
}

// trace of left multiplication via the explicit matrix on the xi basis
RingQI2 matrix_trace(const CliffordElement& x) {
    RingQI2 tr;
    for (unsigned long j = 0; j < (1ul << x.n()); ++j)
        tr += clifford_mul(x, CliffordElement::basis(x.n(), j)).coeff(j);
    return tr;
}

} // namespace

TEST_CASE("scalar ring") {
    RingQI2 i = RingQI2::i(), r2 = RingQI2::sqrt2();
    CHECK(i * i == RingQI2(-1));
    CHECK(r2 * r2 == RingQI2(2));
    CHECK(i * r2 == RingQI2(0, 0, 0, 1));
    CHECK(RingQI2::i_over_sqrt2() * RingQI2::i_over_sqrt2() == RingQI2(Rational(-1, 2)));
    CHECK((i * r2) * (i * r2) == RingQI2(-2));
    RingQI2 x(1, 2, 3, 4), y(5, -1, 0, 2);
    CHECK(x * y == y * x);
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK(x.to_string() == "1 + 2*i + 3*sqrt(2) + 4*i*sqrt(2)");
    CHECK(RingQI2().to_string() == "0");
    CHECK_FALSE(x.is_rational());
    CHECK(RingQI2(7).is_rational());
}

TEST_CASE("basis multiplication") {
    CHECK(reorder_sign(0b0, 0b1) == 1);
    CHECK(reorder_sign(0b01, 0b10) == 1);  // xi1 * xi2 already sorted
    CHECK(reorder_sign(0b10, 0b01) == -1); // xi2 * xi1 needs one swap
    CHECK(reorder_sign(0b01, 0b01) == 1);  // square collapses without sign

    auto xi = [](int k, int n) { return CliffordElement::generator(k, n); };
    CHECK(clifford_mul(xi(1, 3), xi(1, 3)) == CliffordElement::basis(3, 0));
    CHECK(clifford_mul(xi(1, 3), xi(2, 3)) == CliffordElement::basis(3, 0b011));
    CHECK(clifford_mul(xi(2, 3), xi(1, 3)) == -CliffordElement::basis(3, 0b011));
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b)
            CHECK(clifford_mul(xi(a, 5), xi(b, 5)) == -clifford_mul(xi(b, 5), xi(a, 5)));

    auto diff = clifford_add(xi(1, 2), -xi(2, 2));
    CHECK(clifford_mul(diff, diff) == CliffordElement::basis(2, 0, RingQI2(2)));

    std::mt19937 rng(20260825);
    for (int trial = 0; trial < 40; ++trial) {
        int n = trial % 5 + 2;
        auto a = random_element(n, rng), b = random_element(n, rng), c = random_element(n, rng);
        CHECK(clifford_mul(clifford_mul(a, b), c) == clifford_mul(a, clifford_mul(b, c)));
    }
    CHECK_THROWS_AS(clifford_mul(CliffordElement(2), CliffordElement(3)), std::invalid_argument);
    CHECK(CliffordElement(3).coeff(0b101).is_zero());
    CliffordElement z(2);
    z.add_term(0b01, RingQI2(1));
    z.add_term(0b01, RingQI2(-1));
    CHECK(z.is_zero());
    CHECK_THROWS_AS(z.add_term(0b100, RingQI2(1)), std::invalid_argument);
}

TEST_CASE("double cover relations") {
    CHECK_THROWS_AS(embed_generator(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(embed_generator(3, 3), std::invalid_argument);

    for (int n = 2; n <= 7; ++n) {
        CliffordElement minus_one = CliffordElement::basis(n, 0, RingQI2(-1));
        for (int k = 1; k < n; ++k) {
            auto s = embed_generator(k, n);
            CHECK(clifford_mul(s, s) == minus_one);
        }
        // the braid relation holds on the nose: both triple products equal
        // (i/sqrt2)(xi_k - xi_{k+2}); only squares and far pairs see z = -1
        for (int k = 1; k + 1 < n; ++k) {
            auto sk = embed_generator(k, n), sk1 = embed_generator(k + 1, n);
            auto braid = clifford_mul(clifford_mul(sk, sk1), sk);
            CHECK(braid == clifford_mul(clifford_mul(sk1, sk), sk1));
            CliffordElement expect(n);
            expect.add_term(1ul << (k - 1), RingQI2::i_over_sqrt2());
            expect.add_term(1ul << (k + 1), -RingQI2::i_over_sqrt2());
            CHECK(braid == expect);
        }
        for (int k = 1; k < n; ++k) // far generators anticommute
            for (int l = k + 2; l < n; ++l)
                CHECK(clifford_mul(embed_generator(k, n), embed_generator(l, n)) ==
                      -clifford_mul(embed_generator(l, n), embed_generator(k, n)));
    }
}

TEST_CASE("positive class representatives") {
    std::vector<int> ones5(5, 1);
    CHECK(embed_positive_rep(Partition(ones5), 5) == CliffordElement::basis(5, 0));
    CHECK_THROWS_AS(embed_positive_rep(Partition({2, 1}), 3), std::invalid_argument);

    auto pi3 = embed_positive_rep(Partition({3}), 3);
    CHECK(pi3 == clifford_mul(embed_generator(1, 3), embed_generator(2, 3)));
    CHECK(pi3.coeff(0) == RingQI2(Rational(1, 2))); // |const| = 2^-(m-1)/2 for m = 3

    // forgetting signs, conjugation realizes the block-cycle permutation
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : partitions_of(n, PartitionFilter::Odd)) {
            auto pi = embed_positive_rep(lam, n);
            auto w = class_representative(lam);
            for (int i = 1; i <= n; ++i) {
                auto lhs = clifford_mul(pi, CliffordElement::generator(i, n));
                auto rhs = clifford_mul(CliffordElement::generator(w(i), n), pi);
                CHECK((lhs == rhs || lhs == -rhs));
            }
        }
}

TEST_CASE("left multiplication trace") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(trace_left_mul(CliffordElement::basis(n, 0)) == RingQI2(Rational(pow2(n))));
        for (unsigned long j = 1; j < (1ul << n); ++j)
            CHECK(trace_left_mul(CliffordElement::basis(n, j)).is_zero());
    }
    CHECK(trace_left_mul(embed_positive_rep(Partition({3}), 3)) == RingQI2(4));

    std::mt19937 rng(424242);
    for (int trial = 0; trial < 30; ++trial) {
        int n = trial % 4 + 2;
        auto a = random_element(n, rng), b = random_element(n, rng);
        CHECK(trace_left_mul(a) == matrix_trace(a));
        CHECK(trace_left_mul(clifford_mul(a, b)) == trace_left_mul(clifford_mul(b, a)));
    }
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n, PartitionFilter::Odd))
            CHECK(trace_left_mul(embed_positive_rep(lam, n)) ==
                  matrix_trace(embed_positive_rep(lam, n)));
}

TEST_CASE("spin character of the Clifford module") {
    for (int n = 1; n <= 8; ++n) {
        ClassFunction psi(n, ClassFunction::Kind::Spin);
        for (const auto& lam : partitions_of(n, PartitionFilter::Odd)) {
            auto tr = trace_left_mul(embed_positive_rep(lam, n));
            CHECK(tr == RingQI2(Rational(pow2((n + static_cast<int>(lam.length())) / 2))));
            REQUIRE(tr.is_rational());
            psi.set(lam, tr.a);
        }
        // assembled characteristic is 2^(n/2+1) P_n, exactly in Q(sqrt 2)
        auto coeffs = spin_characteristic_sqrt2(psi);
        auto target = big_p(n);
        CHECK(coeffs.size() == target.terms().size());
        for (const auto& [lam, c] : target.terms())
            CHECK(coeffs.at(lam) == pow2_half(n + 2) * Sqrt2Rational(c));
        if (n % 2 == 0)
            CHECK(spin_characteristic(psi) == scale(pow2(n / 2 + 1), big_p(n)));
    }
}

TEST_CASE("spin character of the signed parking realization") {
    // tensor of the parking module with the Clifford module: the trace
    // factors, with the Clifford factor computed from the algebra
    for (int n = 1; n <= 6; ++n) {
        ClassFunction psi(n, ClassFunction::Kind::Spin);
        for (const auto& lam : partitions_of(n, PartitionFilter::Odd)) {
            auto tr = trace_left_mul(embed_positive_rep(lam, n));
            psi.set(lam, Rational(pf_fixed_count(lam)) * Sqrt2Rational(tr.a));
        }
        CHECK(psi == spin_naive_character(n));
        auto coeffs = spin_characteristic_sqrt2(psi);
        auto sh = sh_symfunc(n);
        CHECK(coeffs.size() == sh.terms().size());
        for (const auto& [lam, c] : sh.terms())
            CHECK(coeffs.at(lam) == pow2_half(n) * Sqrt2Rational(c));
        if (n % 2 == 0)
            CHECK(spin_characteristic(psi) == scale(pow2(n / 2), sh_symfunc(n)));
    }
}
