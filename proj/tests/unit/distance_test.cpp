#include "doctest.h"

#include <cmath>

#include "cqcap/distance.hpp"
#include "cqcap/operators.hpp"
#include "cqcap/projectors.hpp"
#include "cqcap/random.hpp"

using cqcap::DensityOperator;
using cqcap::Matrix;
using cqcap::Vector;

namespace {

DensityOperator ket0() { return DensityOperator((Matrix(2, 2) << 1, 0, 0, 0).finished()); }

DensityOperator ket_plus() {
    Matrix m(2, 2);
    m.setConstant(0.5);
    return DensityOperator(m);
}

} // namespace

TEST_SUITE("distance") {

TEST_CASE("trace distance on hand pairs") {
    const auto zero = ket0();
    const auto one = DensityOperator((Matrix(2, 2) << 0, 0, 0, 1).finished());
    const auto half = DensityOperator(0.5 * Matrix::Identity(2, 2));
    CHECK(cqcap::trace_distance(zero, zero) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(cqcap::trace_distance(zero, one) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cqcap::trace_distance(zero, half) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(
        cqcap::trace_distance(zero.mat(), Matrix::Identity(3, 3) / 3.0),
        cqcap::ValidationError);
}

TEST_CASE("pure fidelity on hand pairs") {
    const auto zero = ket0();
    const auto plus = ket_plus();
    CHECK(cqcap::pure_fidelity(zero, zero) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cqcap::pure_fidelity(zero, plus) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(cqcap::pure_fidelity(zero, Matrix(0.5 * Matrix::Identity(2, 2))) ==
          doctest::Approx(0.5).epsilon(1e-12));
    const auto mixed = DensityOperator(0.5 * Matrix::Identity(2, 2));
    CHECK_THROWS_AS(cqcap::pure_fidelity(mixed, zero), cqcap::ValidationError);
}

TEST_CASE("pure pair identity") {
    const auto same = cqcap::pure_fidelity_identity_check(ket0(), ket0());
    CHECK(same.all_pass());

    const auto zp = cqcap::pure_fidelity_identity_check(ket0(), ket_plus());
    CHECK(zp.all_pass());
    CHECK(zp.fidelity == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(zp.distance == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));

    cqcap::RandomStream rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 2 + rng.uniform_int(2);
        CHECK(cqcap::pure_fidelity_identity_check(rng.pure_state(d), rng.pure_state(d))
                  .all_pass());
    }
}

TEST_CASE("sandwich on hand pairs") {
    const auto self = cqcap::fidelity_distance_bounds_check(ket0(), ket0().mat());
    CHECK(self.all_pass());
    CHECK(self.distance == doctest::Approx(0.0).epsilon(1e-12));

    const auto against_half =
        cqcap::fidelity_distance_bounds_check(ket0(), Matrix(0.5 * Matrix::Identity(2, 2)));
    CHECK(against_half.all_pass());
    CHECK(against_half.distance == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(against_half.fidelity == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("sandwich holds for subnormalized states via the trace deficit") {
    // With the plain trace distance the lower bound would be false: for
    // sigma = rho/2 the plain distance is 1/4 while 1 - F = 1/2. The deficit
    // term (1 - Tr sigma)/2 restores it with equality.
    const auto rho = ket0();
    const Matrix sigma = 0.5 * rho.mat();
    CHECK(cqcap::trace_distance(rho.mat(), sigma) == doctest::Approx(0.25).epsilon(1e-12));
    const auto r = cqcap::fidelity_distance_bounds_check(rho, sigma);
    CHECK(r.distance == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.fidelity == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.all_pass());

    const auto quarter =
        cqcap::fidelity_distance_bounds_check(rho, Matrix(0.25 * Matrix::Identity(2, 2)));
    CHECK(quarter.distance == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(quarter.fidelity == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(quarter.all_pass());
}

TEST_CASE("sandwich property on random pairs") {
    cqcap::RandomStream rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        const int d = 2 + rng.uniform_int(3);
        const auto rho = rng.pure_state(d);
        Matrix sigma = rng.mixed_state(d).mat();
        if (trial % 2 == 1) sigma *= 0.25 + 0.75 * rng.uniform();
        CHECK(cqcap::fidelity_distance_bounds_check(rho, sigma).all_pass());
    }
}

TEST_CASE("sandwich rejects bad inputs") {
    CHECK_THROWS_AS(
        cqcap::fidelity_distance_bounds_check(ket0(), Matrix(2.0 * Matrix::Identity(2, 2))),
        cqcap::ValidationError);
    Matrix indefinite = Matrix::Zero(2, 2);
    indefinite(0, 0) = 0.5;
    indefinite(1, 1) = -0.5;
    CHECK_THROWS_AS(cqcap::fidelity_distance_bounds_check(ket0(), indefinite),
                    cqcap::ValidationError);
}

TEST_CASE("gentle measurement residual on hand cases") {
    const auto rho = ket0();
    CHECK(cqcap::gentle_measurement_residual(rho, Matrix::Identity(2, 2)) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(cqcap::gentle_measurement_residual(rho, rho.mat()) ==
          doctest::Approx(0.0).epsilon(1e-12));

    const double eps = 0.01;
    Matrix x = Matrix::Identity(2, 2);
    x(0, 0) = 1.0 - eps;
    const double residual = cqcap::gentle_measurement_residual(rho, x);
    CHECK(residual == doctest::Approx(eps).epsilon(1e-9));
    CHECK(residual <= std::sqrt(8.0 * eps) + 1e-9);

    CHECK_THROWS_AS(cqcap::gentle_measurement_residual(rho, Matrix(2.0 * Matrix::Identity(2, 2))),
                    cqcap::ValidationError);
    CHECK_THROWS_AS(
        cqcap::gentle_measurement_residual(rho, Matrix(-0.1 * Matrix::Identity(2, 2))),
        cqcap::ValidationError);
}

TEST_CASE("gentle measurement bound on random pairs") {
    cqcap::RandomStream rng(43);
    for (int trial = 0; trial < 500; ++trial) {
        const int d = 2 + rng.uniform_int(5);
        const auto check = cqcap::gentle_measurement_check(rng.mixed_state(d),
                                                           rng.contraction(d).mat());
        CHECK(check.pass);
    }
}

TEST_CASE("two outcome pinching contracts the trace distance") {
    cqcap::RandomStream rng(44);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 2 + rng.uniform_int(3);
        const auto rho = rng.pure_state(d);
        const auto sigma = rng.mixed_state(d);
        const Matrix p = rho.mat();
        const Matrix q = Matrix::Identity(d, d) - p;
        const Matrix pinched = p * sigma.mat() * p + q * sigma.mat() * q;
        const double full = cqcap::trace_norm(rho.mat() - sigma.mat());
        const double reduced = cqcap::trace_norm(rho.mat() - pinched);
        CHECK(full >= reduced - 1e-9);
    }
}

} // TEST_SUITE
