#pragma once

#include <Eigen/Dense>
#include <functional>
#include <utility>
#include <vector>

// Independent reference computations the unit tests compare the library
// against. Deliberately use different algorithms and data layouts than the
// library code.
namespace testsupport {

// Capacity in bits of a row-stochastic transition matrix t(x, y), via the
// classical alternating maximization with the standard per-iteration
// capacity bracket log sum p c <= C <= log max c.
double classical_ba_capacity(const Eigen::MatrixXd& t, double tol);

// Eigenvalues of a 2x2 Hermitian matrix {low, high} from trace and
// determinant.
std::pair<double, double> eig2(const Eigen::Matrix2cd& m);

double binary_entropy(double p);

// Visits all words of length n over {0..a-1} in lexicographic order.
void for_each_word(int n, int a, const std::function<void(const std::vector<int>&)>& visit);

} // namespace testsupport
