#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "cqcap/operators.hpp"
#include "cqcap/random.hpp"

using cqcap::Matrix;
using cqcap::RandomStream;
using cqcap::Vector;
using cqcap::Word;

TEST_SUITE("random") {

TEST_CASE("mix64 matches the published finalizer") {
    // First output of a SplitMix64 generator seeded with 0.
    CHECK(cqcap::mix64(0x9E3779B97F4A7C15ULL) == 0xE220A8397B1DCDAFULL);
    CHECK(cqcap::mix64(0) == 0);
}

TEST_CASE("streams are reproducible and substreams are distinct") {
    RandomStream a(12345);
    RandomStream b(12345);
    for (int i = 0; i < 64; ++i) CHECK(a.next_u64() == b.next_u64());

    RandomStream s0(777, 0);
    RandomStream s1(777, 1);
    RandomStream s2(777, 2);
    int collisions = 0;
    for (int i = 0; i < 16; ++i) {
        const std::uint64_t x0 = s0.next_u64();
        const std::uint64_t x1 = s1.next_u64();
        const std::uint64_t x2 = s2.next_u64();
        if (x0 == x1 || x1 == x2 || x0 == x2) ++collisions;
    }
    CHECK(collisions == 0);
}

TEST_CASE("uniform values live in the unit interval with sane moments") {
    RandomStream rng(1);
    double sum = 0.0;
    double sumsq = 0.0;
    const int trials = 20000;
    for (int i = 0; i < trials; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
        sumsq += u * u;
    }
    CHECK(sum / trials == doctest::Approx(0.5).epsilon(0.02));
    CHECK(sumsq / trials == doctest::Approx(1.0 / 3.0).epsilon(0.02));
}

TEST_CASE("normal samples have standard moments") {
    RandomStream rng(2);
    double sum = 0.0;
    double sumsq = 0.0;
    const int trials = 20000;
    for (int i = 0; i < trials; ++i) {
        const double g = rng.normal();
        sum += g;
        sumsq += g * g;
    }
    CHECK(std::abs(sum / trials) < 0.03);
    CHECK(sumsq / trials == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("uniform_int covers its range") {
    RandomStream rng(3);
    std::vector<int> counts(5, 0);
    for (int i = 0; i < 5000; ++i) {
        const int k = rng.uniform_int(5);
        REQUIRE(k >= 0);
        REQUIRE(k < 5);
        ++counts[k];
    }
    for (int c : counts) CHECK(c > 700); // expected 1000 each
}

TEST_CASE("random kets are normalized") {
    RandomStream rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        const Vector v = rng.ket(2 + trial % 5);
        CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("random states validate and have the requested rank") {
    RandomStream rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 2 + trial % 4;
        CHECK(rng.pure_state(d).is_pure());

        const auto full = rng.mixed_state(d);
        CHECK(std::abs(std::real(full.mat().trace()) - 1.0) < 1e-12);
        CHECK(cqcap::min_eigenvalue(full.mat()) > 1e-12); // almost surely full rank

        const auto rank1 = rng.mixed_state(d, 1);
        CHECK(rank1.is_pure());
        if (d >= 3) {
            const auto rank2 = rng.mixed_state(d, 2);
            int heavy = 0;
            for (int i = 0; i < d; ++i)
                if (rank2.decomposition().eigenvalue(i) > 1e-9) ++heavy;
            CHECK(heavy == 2);
        }
    }
}

TEST_CASE("contractions span exactly the unit interval") {
    RandomStream rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 2 + trial % 4;
        const auto x = rng.contraction(d);
        CHECK(cqcap::min_eigenvalue(x.mat()) == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(cqcap::max_eigenvalue(x.mat()) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("random channels produce valid states") {
    RandomStream rng(7);
    const auto w = rng.channel(3, 4);
    CHECK(w.alphabet_size() == 3);
    CHECK(w.dim() == 4);
    for (int x = 0; x < 3; ++x)
        CHECK(std::abs(std::real(w.state(x).mat().trace()) - 1.0) < 1e-12);

    const auto c = rng.commuting_channel(3, 4);
    for (int x = 0; x < 3; ++x) {
        const Matrix& m = c.state(x).mat();
        Matrix off = m;
        off.diagonal().setZero();
        CHECK(off.cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST_CASE("random distributions sum to one") {
    RandomStream rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = rng.distribution(2 + trial % 3);
        double total = 0.0;
        for (int x = 0; x < p.size(); ++x) {
            CHECK(p(x) >= 0.0);
            total += p(x);
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("random povms are complete") {
    RandomStream rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 2 + trial % 3;
        const int outcomes = 1 + trial % 5;
        const auto povm = rng.povm(d, outcomes);
        REQUIRE(static_cast<int>(povm.size()) == outcomes);
        Matrix sum = Matrix::Zero(d, d);
        for (const Matrix& e : povm) {
            CHECK(cqcap::min_eigenvalue(e) > -1e-10);
            sum += e;
        }
        CHECK((sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("random words and shuffles") {
    RandomStream rng(10);
    const Word w = rng.word(50, 3);
    REQUIRE(w.size() == 50);
    for (int letter : w) {
        CHECK(letter >= 0);
        CHECK(letter < 3);
    }

    Word shuffled = w;
    rng.shuffle(shuffled);
    Word sorted_original = w;
    Word sorted_shuffled = shuffled;
    std::sort(sorted_original.begin(), sorted_original.end());
    std::sort(sorted_shuffled.begin(), sorted_shuffled.end());
    CHECK(sorted_original == sorted_shuffled);
}

} // TEST_SUITE
