#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <vector>

#include "cqcap/errors.hpp"

namespace cqcap {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Tolerances. Chosen for double precision headroom at dense dimension <= 4096.
inline constexpr double kHermitianTol = 1e-10;     // selfadjointness / unit trace
inline constexpr double kSpectralTol = 1e-9;       // orthonormality / reconstruction
inline constexpr double kEigenvalueClamp = -1e-10; // most negative admissible eigenvalue
inline constexpr double kPsdTol = 1e-9;            // operator order checks
inline constexpr double kDegenerateGap = 1e-10;    // eigenvalue clustering
inline constexpr int kDefaultDenseCap = 4096;      // largest dense dimension

// Spectral decomposition of a selfadjoint operator. Eigenvalues are sorted
// descending; eigenvector columns are orthonormal and canonically fixed (see
// eig_decompose), so the same input bytes always produce the same output
// bytes.
class SpectralDecomposition {
public:
    SpectralDecomposition(Eigen::VectorXd eigenvalues, Matrix eigenvectors);

    int dim() const { return static_cast<int>(eigenvalues_.size()); }
    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
    double eigenvalue(int j) const { return eigenvalues_(j); }
    const Matrix& eigenvectors() const { return eigenvectors_; }
    Vector eigenvector(int j) const { return eigenvectors_.col(j); }

    // Rank-1 projector onto the j-th eigenvector.
    Matrix projector(int j) const;

    // Eigenvalue list as a plain vector (a probability distribution when the
    // operator is a state).
    std::vector<double> eigenvalue_list() const;

    // Sum of eigenvalue * projector.
    Matrix reconstruct() const;

private:
    Eigen::VectorXd eigenvalues_;
    Matrix eigenvectors_; // columns
};

// Complex square matrix constrained to be selfadjoint. The constructor
// symmetrizes (A + A^dagger)/2 after checking the deviation is within
// kHermitianTol.
class HermitianOperator {
public:
    explicit HermitianOperator(const Matrix& entries);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const Matrix& mat() const { return mat_; }
    double trace() const { return mat_.trace().real(); }

private:
    Matrix mat_;
};

// Density operator: selfadjoint, eigenvalues >= kEigenvalueClamp (negatives
// clamped to zero after the check), unit trace within kHermitianTol. The
// spectral decomposition computed during validation is kept, so every state
// carries one globally fixed diagonalization.
class DensityOperator {
public:
    explicit DensityOperator(const Matrix& entries);
    explicit DensityOperator(const HermitianOperator& op);

    int dim() const { return op_.dim(); }
    const Matrix& mat() const { return op_.mat(); }
    const HermitianOperator& hermitian() const { return op_; }
    const SpectralDecomposition& decomposition() const { return *dec_; }
    std::shared_ptr<const SpectralDecomposition> decomposition_ptr() const { return dec_; }

    bool is_pure(double tol = kSpectralTol) const;

private:
    HermitianOperator op_;
    std::shared_ptr<const SpectralDecomposition> dec_;
};

// Deterministic spectral decomposition with canonical tie-breaking: within a
// degenerate cluster (eigenvalue gap <= kDegenerateGap) the eigenvectors are
// replaced by the Gram-Schmidt orthonormalization of the canonical basis
// vectors projected onto the eigenspace, in index order, discarding residuals
// below 1e-8. Each vector's phase is fixed by making its largest-modulus
// entry real nonnegative.
SpectralDecomposition eig_decompose(const Matrix& a);
SpectralDecomposition eig_decompose(const HermitianOperator& a);

// Kronecker products. Throws CapExceededError when the result dimension
// exceeds dense_cap.
Matrix tensor(const Matrix& a, const Matrix& b, int dense_cap = kDefaultDenseCap);
HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b,
                         int dense_cap = kDefaultDenseCap);
Vector tensor(const Vector& a, const Vector& b, int dense_cap = kDefaultDenseCap);

// n-fold Kronecker product of per-slot factors.
Matrix kron_all(const std::vector<const Matrix*>& factors, int dense_cap = kDefaultDenseCap);

// Applies (F_1 tensor ... tensor F_n) to a vector without materializing the
// product matrix. All factors must be square.
Vector kron_apply(const std::vector<const Matrix*>& factors, const Vector& v);

// Sum of the absolute values of the eigenvalues.
double trace_norm(const HermitianOperator& a);
double trace_norm(const Matrix& a);

// Positive and negative parts: both PSD, a = pos - neg, pos*neg = 0.
std::pair<HermitianOperator, HermitianOperator> positive_negative_parts(const HermitianOperator& a);

// Von Neumann entropy in bits, with 0 log 0 := 0.
double von_neumann_entropy(const DensityOperator& rho);

// Principal square root of a PSD matrix via spectral decomposition,
// clamping eigenvalues at 0. Eigenvalues below -tol are an error.
Matrix sqrt_psd(const Matrix& a, double tol = kPsdTol);

double min_eigenvalue(const Matrix& a);
double max_eigenvalue(const Matrix& a);

// Low-rank factor F with F F^dagger = a, columns v_j sqrt(lambda_j) for the
// eigenvalues above cut. Eigenvalues below -kPsdTol are an error.
Matrix psd_factor(const Matrix& a, double cut = 1e-12);

// a <= b in the PSD order, within tolerance: min eigenvalue of (b - a) >= -tol.
bool operator_leq(const Matrix& a, const Matrix& b, double tol = kPsdTol);

} // namespace cqcap
