#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "shpf/cache.hpp"
#include "shpf/serialize.hpp"

using namespace shpf;

TEST_CASE("symmetric function JSON round trip") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(symfunc_from_json(symfunc_to_json(sh_symfunc(n))) == sh_symfunc(n));
        CHECK(symfunc_from_json(symfunc_to_json(pf_symfunc(n))) == pf_symfunc(n));
    }

    Json j = symfunc_to_json(pf_symfunc(3));
    CHECK(j["degree"] == 3);
    CHECK(j["basis"] == "p");
    // coefficients are exact strings, never floats
    bool found = false;
    for (const auto& term : j["terms"])
        if (term["partition"] == Json::array({1, 1, 1})) {
            CHECK(term["coeff"] == "8/3");
            found = true;
        }
    CHECK(found);
    CHECK(j.dump().find('.') == std::string::npos);

    Json wrong = j;
    wrong["basis"] = "v-odd";
    CHECK_THROWS_AS(symfunc_from_json(wrong), std::invalid_argument);
}

TEST_CASE("graded symmetric function JSON round trip") {
    for (int n = 1; n <= 5; ++n) {
        TSymFunc f = t_graded(n).first;
        CHECK(tsymfunc_from_json(tsymfunc_to_json(f)) == f);
    }
    Json j = tsymfunc_to_json(t_graded(2).first);
    // SH_2(1,t) = (2t + 4) p_(1,1): poly coefficients listed from t^0 up
    CHECK(j["terms"][0]["poly"] == Json::array({"4", "2"}));
}

TEST_CASE("V expansion JSON round trip") {
    for (int n = 1; n <= 6; ++n) {
        auto coeffs = expand_odd_v(sh_symfunc(n));
        Json j = expansion_to_json(n, "v-odd", coeffs);
        CHECK(j["basis"] == "v-odd");
        CHECK(expansion_from_json(j) == coeffs);
    }
}

TEST_CASE("shifted object JSON round trip") {
    for (const auto& x : enumerate_sorted_naive(4))
        CHECK(naive_from_json(naive_to_json(x)) == x);
    for (const auto& y : enumerate_sorted_odd(4))
        CHECK(odd_from_json(odd_to_json(y)) == y);

    SortedOddShifted y{{1, 1, 2}, {-1, 1, 0}, {{2, 3}}};
    Json j = odd_to_json(y);
    CHECK(j["tau"] == Json::array({Json::array({2, 3})}));

    Json bad = j;
    bad["tau"] = Json::array({Json::array({2})});
    CHECK_THROWS_AS(odd_from_json(bad), std::invalid_argument);
}

TEST_CASE("class function JSON round trip") {
    for (int n = 1; n <= 5; ++n) {
        ClassFunction chi = naive_character(n);
        CHECK(classfunction_from_json(classfunction_to_json(chi)) == chi);
        ClassFunction psi = spin_naive_character(n);
        CHECK(classfunction_from_json(classfunction_to_json(psi)) == psi);
    }

    // a genuinely irrational spin value serializes as a two-part array
    ClassFunction psi(3, ClassFunction::Kind::Spin);
    psi.set(Partition({3}), Sqrt2Rational(Rational(1), Rational(1, 2)));
    psi.set(Partition({1, 1, 1}), Sqrt2Rational(0));
    Json j = classfunction_to_json(psi);
    CHECK(j["kind"] == "spin");
    CHECK(j["values"][0]["value"] == Json::array({"1", "1/2"}));
    CHECK(classfunction_from_json(j) == psi);

    Json bad = j;
    bad["kind"] = "modular";
    CHECK_THROWS_AS(classfunction_from_json(bad), std::invalid_argument);
}

TEST_CASE("cache store, load, and corruption recovery") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "shpf-cache-test";
    fs::remove_all(dir);

    const std::string key = cache_key("expand-sh-p", 4);
    CHECK(key == "expand-sh-p-4-v" + std::to_string(kCacheVersion));
    CHECK_FALSE(cache_load(dir, key).has_value());

    Json payload = symfunc_to_json(sh_symfunc(4));
    cache_store(dir, key, payload);
    auto hit = cache_load(dir, key);
    REQUIRE(hit.has_value());
    CHECK(*hit == payload);
    CHECK(symfunc_from_json(*hit) == sh_symfunc(4));

    {
        std::ofstream f(dir / (key + ".json"));
        f << "{ not json";
    }
    CHECK_FALSE(cache_load(dir, key).has_value());
    // the corrupt entry is gone, not re-read forever
    CHECK_FALSE(fs::exists(dir / (key + ".json")));

    fs::remove_all(dir);
}
