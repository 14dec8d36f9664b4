#pragma once

#include <vector>

#include "cqcap/operators.hpp"
#include "cqcap/types.hpp"

namespace cqcap {

// D(rho, sigma) = trace_norm(rho - sigma) / 2. Accepts any Hermitian
// matrices of one dimension, so subnormalized states are fine.
double trace_distance(const Matrix& rho, const Matrix& sigma);
double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);

// F(rho, sigma) = Tr(rho sigma) for rho pure. Throws when rho is not
// rank 1 within tolerance.
double pure_fidelity(const DensityOperator& rho, const Matrix& sigma);
double pure_fidelity(const DensityOperator& rho, const DensityOperator& sigma);

struct FidelityDistanceReport {
    double distance = 0.0;
    double fidelity = 0.0;
    std::vector<BoundCheck> checks;
    bool all_pass() const;
};

// For two pure states, 1 - F = D^2 within 1e-9.
FidelityDistanceReport pure_fidelity_identity_check(const DensityOperator& rho,
                                                    const DensityOperator& sigma);

// For rho pure and sigma PSD with trace at most 1 (subnormalized allowed),
// D >= 1 - F >= D^2, both within 1e-9. The reported distance carries the
// trace deficit, D = trace_distance + (1 - Tr sigma)/2, so the sandwich
// stays valid for subnormalized sigma; for Tr sigma = 1 it is the plain
// trace distance. With the plain distance the lower bound fails, e.g.
// sigma = rho/2 gives 1/4 < 1/2.
FidelityDistanceReport fidelity_distance_bounds_check(const DensityOperator& rho,
                                                      const Matrix& sigma);
FidelityDistanceReport fidelity_distance_bounds_check(const DensityOperator& rho,
                                                      const DensityOperator& sigma);

// trace_norm(rho - sqrt(X) rho sqrt(X)) for an operator 0 <= X <= I.
// Bounded by sqrt(8 lambda) with lambda = 1 - Tr(rho X).
double gentle_measurement_residual(const DensityOperator& rho, const Matrix& x);

// Packages the residual against its bound; achieved is the residual and
// bound is sqrt(8 lambda). The witness records lambda and the ratio.
BoundCheck gentle_measurement_check(const DensityOperator& rho, const Matrix& x);

// P sigma P + (I - P) sigma (I - P) for a projector P: the two-outcome
// pinching used to reduce mixed-state comparisons to commuting ones.
Matrix two_outcome_pinch(const Matrix& projector, const Matrix& sigma);

} // namespace cqcap
