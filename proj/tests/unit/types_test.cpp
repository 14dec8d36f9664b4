#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "cqcap/random.hpp"
#include "cqcap/types.hpp"
#include "oracles.hpp"

using cqcap::InputDistribution;
using cqcap::TypicalSetSpec;
using cqcap::Word;

TEST_SUITE("types") {

TEST_CASE("typicality constant") {
    CHECK(std::abs(cqcap::kTypicalityK - 1.0614756908460860) < 1e-15);
}

TEST_CASE("shannon entropy") {
    CHECK(std::abs(cqcap::shannon_entropy({0.5, 0.5}) - 1.0) < 1e-12);
    CHECK(std::abs(cqcap::shannon_entropy({0.25, 0.25, 0.25, 0.25}) - 2.0) < 1e-12);
    CHECK(cqcap::shannon_entropy({1.0, 0.0}) == 0.0);
    CHECK(std::abs(cqcap::shannon_entropy({0.25, 0.75}) - 0.81127812445913286) < 1e-12);
}

TEST_CASE("type of a word") {
    const auto t = cqcap::type_of({0, 1, 0, 1, 1}, 3);
    CHECK(t.n == 5);
    CHECK(t.counts == std::vector<std::int64_t>{2, 3, 0});
    const InputDistribution p = t.as_distribution();
    CHECK(p(0) == doctest::Approx(0.4));
    CHECK(p(2) == 0.0);
}

TEST_CASE("count_types matches brute force") {
    CHECK(cqcap::count_types(4, 2) == 5);
    for (int a = 1; a <= 3; ++a) {
        for (int n = 1; n <= 6; ++n) {
            int distinct = 0;
            cqcap::for_each_count_vector(n, a, [&](const std::vector<std::int64_t>&) {
                ++distinct;
            });
            CHECK(cqcap::count_types(n, a) == distinct);
        }
    }
}

TEST_CASE("count vectors are visited in lexicographic order") {
    std::vector<std::vector<std::int64_t>> seen;
    cqcap::for_each_count_vector(4, 2, [&](const std::vector<std::int64_t>& c) {
        seen.push_back(c);
    });
    REQUIRE(seen.size() == 5);
    CHECK(seen.front() == std::vector<std::int64_t>{0, 4});
    CHECK(seen.back() == std::vector<std::int64_t>{4, 0});
    CHECK(std::is_sorted(seen.begin(), seen.end()));
}

TEST_CASE("log2 multinomial") {
    CHECK(std::abs(cqcap::log2_multinomial(4, {2, 2}) - std::log2(6.0)) < 1e-12);
    CHECK(cqcap::log2_multinomial(3, {3, 0}) == 0.0);
}

TEST_CASE("enumeration agrees with the per-word predicate") {
    cqcap::RandomStream rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        const int a = 2 + rng.uniform_int(2);
        const int n = 3 + rng.uniform_int(4);
        const TypicalSetSpec spec{rng.distribution(a), n, 1.0 + rng.uniform_int(3)};
        const std::vector<Word> members = cqcap::enumerate_typical_set(spec);
        CHECK(std::is_sorted(members.begin(), members.end()));
        std::size_t expected = 0;
        testsupport::for_each_word(n, a, [&](const std::vector<int>& w) {
            if (cqcap::is_variance_typical(w, spec)) ++expected;
        });
        CHECK(members.size() == expected);
        for (const Word& w : members) CHECK(cqcap::is_variance_typical(w, spec));
    }
}

TEST_CASE("enumeration cap") {
    const TypicalSetSpec spec{InputDistribution::uniform(2), 24, 2.0};
    CHECK_THROWS_AS(cqcap::enumerate_typical_set(spec, 1000), cqcap::CapExceededError);
}

TEST_CASE("set probability and cardinality match enumeration") {
    cqcap::RandomStream rng(22);
    for (int trial = 0; trial < 10; ++trial) {
        const int a = 2 + rng.uniform_int(2);
        const int n = 3 + rng.uniform_int(5);
        const TypicalSetSpec spec{rng.distribution(a), n, 1.0 + rng.uniform_int(3)};
        const double exact = cqcap::typical_set_probability(spec);
        const double bywords = cqcap::typical_set_probability_by_enumeration(spec);
        CHECK(std::abs(exact - bywords) < 1e-12);
        const double members = static_cast<double>(cqcap::enumerate_typical_set(spec).size());
        CHECK(cqcap::typical_set_cardinality(spec) == doctest::Approx(members).epsilon(1e-12));
    }
}

TEST_CASE("bounds check passes on a random grid") {
    cqcap::RandomStream rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const int a = 1 + rng.uniform_int(3);
        const int n = 1 + rng.uniform_int(10);
        const double delta = std::vector<double>{1.0, 2.0, 4.0}[static_cast<std::size_t>(
            rng.uniform_int(3))];
        const auto report = cqcap::typical_set_bounds_check({rng.distribution(a), n, delta});
        CHECK(report.all_pass());
    }
}

TEST_CASE("floor and ceiling checks") {
    const auto ok = cqcap::floor_check("x", 1.0, 0.5, 1e-9);
    CHECK(ok.pass);
    CHECK(ok.slack == doctest::Approx(0.5));

    const auto bad = cqcap::floor_check("x", 0.4, 0.5, 1e-9);
    CHECK_FALSE(bad.pass);

    const auto tolerated = cqcap::floor_check("x", 0.5 - 1e-10, 0.5, 1e-9);
    CHECK(tolerated.pass);

    // Relative tolerance once |bound| > 1.
    const auto relative = cqcap::ceiling_check("x", 1000.0 + 1e-7, 1000.0, 1e-9);
    CHECK(relative.pass);
    const auto over = cqcap::ceiling_check("x", 1000.1, 1000.0, 1e-9);
    CHECK_FALSE(over.pass);

    const auto vac = cqcap::floor_check("x", -5.0, 0.0, 1e-9, true);
    CHECK(vac.pass);
    CHECK(vac.vacuous);
}

TEST_CASE("word rendering") {
    CHECK(cqcap::word_to_string({0, 2, 1}) == "0,2,1");
    CHECK(cqcap::word_to_string({}) == "");
}

} // TEST_SUITE
