#include "cqcap/distance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cqcap/errors.hpp"

namespace cqcap {

namespace {

constexpr double kInequalityTol = 1e-9;

void require_same_dim(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ValidationError("states must share one dimension");
}

void require_pure(const DensityOperator& rho) {
    if (!rho.is_pure()) throw ValidationError("state must be pure (rank 1)");
}

// PSD within 1e-9, trace <= 1 + 1e-9: a possibly subnormalized state.
void require_substate(const Matrix& sigma) {
    if ((sigma - sigma.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol)
        throw ValidationError("state must be Hermitian");
    if (min_eigenvalue(sigma) < -kPsdTol)
        throw ValidationError("state must be positive semidefinite");
    if (std::real(sigma.trace()) > 1.0 + kPsdTol)
        throw ValidationError("state trace must not exceed 1");
}

BoundCheck lower_bound_check(std::string name, double quantity, double floor_value) {
    BoundCheck c;
    c.name = std::move(name);
    c.bound = floor_value;
    c.achieved = quantity;
    c.slack = quantity - floor_value;
    c.pass = c.slack >= -kInequalityTol;
    return c;
}

} // namespace

double trace_distance(const Matrix& rho, const Matrix& sigma) {
    require_same_dim(rho, sigma);
    return 0.5 * trace_norm(rho - sigma);
}

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma) {
    return trace_distance(rho.mat(), sigma.mat());
}

double pure_fidelity(const DensityOperator& rho, const Matrix& sigma) {
    require_pure(rho);
    require_same_dim(rho.mat(), sigma);
    return std::real((rho.mat() * sigma).trace());
}

double pure_fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
    return pure_fidelity(rho, sigma.mat());
}

bool FidelityDistanceReport::all_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

FidelityDistanceReport pure_fidelity_identity_check(const DensityOperator& rho,
                                                    const DensityOperator& sigma) {
    require_pure(rho);
    require_pure(sigma);
    FidelityDistanceReport r;
    r.distance = trace_distance(rho, sigma);
    r.fidelity = pure_fidelity(rho, sigma);
    BoundCheck c;
    c.name = "pure_infidelity_equals_distance_squared";
    c.bound = kInequalityTol;
    c.achieved = std::abs(1.0 - r.fidelity - r.distance * r.distance);
    c.slack = c.bound - c.achieved;
    c.pass = c.slack >= 0.0;
    r.checks.push_back(std::move(c));
    return r;
}

FidelityDistanceReport fidelity_distance_bounds_check(const DensityOperator& rho,
                                                      const Matrix& sigma) {
    require_pure(rho);
    require_substate(sigma);
    FidelityDistanceReport r;
    const double deficit = std::max(1.0 - std::real(sigma.trace()), 0.0);
    r.distance = trace_distance(rho.mat(), sigma) + 0.5 * deficit;
    r.fidelity = pure_fidelity(rho, sigma);
    const double infidelity = 1.0 - r.fidelity;
    r.checks.push_back(
        lower_bound_check("distance_dominates_infidelity", r.distance, infidelity));
    r.checks.push_back(lower_bound_check("infidelity_dominates_distance_squared", infidelity,
                                         r.distance * r.distance));
    return r;
}

FidelityDistanceReport fidelity_distance_bounds_check(const DensityOperator& rho,
                                                      const DensityOperator& sigma) {
    return fidelity_distance_bounds_check(rho, sigma.mat());
}

double gentle_measurement_residual(const DensityOperator& rho, const Matrix& x) {
    require_same_dim(rho.mat(), x);
    if ((x - x.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol)
        throw ValidationError("measurement operator must be Hermitian");
    if (min_eigenvalue(x) < -kPsdTol || max_eigenvalue(x) > 1.0 + kPsdTol)
        throw ValidationError("measurement operator must satisfy 0 <= X <= I");
    const Matrix root = sqrt_psd(x);
    return trace_norm(rho.mat() - root * rho.mat() * root);
}

BoundCheck gentle_measurement_check(const DensityOperator& rho, const Matrix& x) {
    const double residual = gentle_measurement_residual(rho, x);
    double lambda = 1.0 - std::real((rho.mat() * x).trace());
    lambda = std::min(std::max(lambda, 0.0), 1.0);
    BoundCheck c;
    c.name = "gentle_measurement";
    c.bound = std::sqrt(8.0 * lambda);
    c.achieved = residual;
    c.slack = c.bound - c.achieved;
    c.pass = c.slack >= -kInequalityTol;
    std::ostringstream w;
    w << "lambda=" << lambda << " ratio=" << (c.bound > 0.0 ? residual / c.bound : 0.0);
    c.witness = w.str();
    return c;
}

Matrix two_outcome_pinch(const Matrix& projector, const Matrix& sigma) {
    require_same_dim(projector, sigma);
    const Matrix comp = Matrix::Identity(projector.rows(), projector.cols()) - projector;
    return projector * sigma * projector + comp * sigma * comp;
}

} // namespace cqcap
