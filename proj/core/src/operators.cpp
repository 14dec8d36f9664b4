#include "cqcap/operators.hpp"

#include "cqcap/types.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace cqcap {

namespace {

std::string dump_matrix(const Matrix& a) {
    std::ostringstream os;
    os.precision(17);
    os << a;
    return os.str();
}

// First index whose modulus is within 1e-9 of the maximum.
int pivot_index(const Vector& v) {
    const double top = v.cwiseAbs().maxCoeff();
    for (int i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) >= top - 1e-9) return i;
    }
    return 0;
}

// Rotate the global phase so the pivot entry is real nonnegative.
void fix_phase(Eigen::Ref<Vector> v) {
    const int i = pivot_index(v);
    const double mod = std::abs(v(i));
    if (mod < 1e-14) return;
    v *= std::conj(v(i)) / mod;
}

// Replace the eigenvectors of a degenerate cluster by the canonical basis of
// its eigenspace: project e_0, e_1, ... onto the cluster projector and
// Gram-Schmidt, discarding residuals below 1e-8. The orthogonalization runs
// in the coordinates of the cluster's own columns, so every candidate lies
// exactly in the cluster span and normalizing a tiny residual cannot leak
// weight into other eigenspaces.
void canonicalize_cluster(Matrix& vecs, int first, int count) {
    const int d = static_cast<int>(vecs.rows());
    const Matrix coeff = vecs.middleCols(first, count).adjoint(); // col k = V^dagger e_k
    Matrix basis(count, count);
    int accepted = 0;
    for (int k = 0; k < d && accepted < count; ++k) {
        Vector c = coeff.col(k);
        for (int pass = 0; pass < 2; ++pass) {
            for (int j = 0; j < accepted; ++j) {
                c -= basis.col(j) * (basis.col(j).dot(c));
            }
        }
        const double norm = c.norm();
        if (norm < 1e-8) continue;
        basis.col(accepted) = c / norm;
        ++accepted;
    }
    if (accepted < count) {
        throw SolverError("degenerate eigenspace canonicalization failed: span not covered "
                          "by canonical basis projections");
    }
    const Matrix rotated = vecs.middleCols(first, count) * basis;
    vecs.middleCols(first, count) = rotated;
}

} // namespace

SpectralDecomposition::SpectralDecomposition(Eigen::VectorXd eigenvalues, Matrix eigenvectors)
    : eigenvalues_(std::move(eigenvalues)), eigenvectors_(std::move(eigenvectors)) {
    const int d = dim();
    if (eigenvectors_.rows() != d || eigenvectors_.cols() != d) {
        throw ValidationError("spectral decomposition: eigenvector matrix shape mismatch");
    }
    for (int j = 1; j < d; ++j) {
        if (eigenvalues_(j) > eigenvalues_(j - 1)) {
            throw ValidationError("spectral decomposition: eigenvalues not sorted descending");
        }
    }
    const double ortho = (eigenvectors_.adjoint() * eigenvectors_ - Matrix::Identity(d, d))
                             .cwiseAbs()
                             .maxCoeff();
    if (ortho > kSpectralTol) {
        throw ValidationError("spectral decomposition: eigenvectors not orthonormal");
    }
}

Matrix SpectralDecomposition::projector(int j) const {
    return eigenvectors_.col(j) * eigenvectors_.col(j).adjoint();
}

std::vector<double> SpectralDecomposition::eigenvalue_list() const {
    return {eigenvalues_.data(), eigenvalues_.data() + eigenvalues_.size()};
}

Matrix SpectralDecomposition::reconstruct() const {
    return eigenvectors_ * eigenvalues_.asDiagonal().toDenseMatrix().cast<Complex>() *
           eigenvectors_.adjoint();
}

HermitianOperator::HermitianOperator(const Matrix& entries) {
    if (entries.rows() != entries.cols() || entries.rows() == 0) {
        throw ValidationError("hermitian operator: matrix must be square and nonempty");
    }
    const double dev = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
    if (dev > kHermitianTol) {
        std::ostringstream os;
        os << "hermitian operator: selfadjointness violated by " << dev;
        throw ValidationError(os.str());
    }
    mat_ = 0.5 * (entries + entries.adjoint());
}

DensityOperator::DensityOperator(const Matrix& entries)
    : DensityOperator(HermitianOperator(entries)) {}

DensityOperator::DensityOperator(const HermitianOperator& op) : op_(op) {
    SpectralDecomposition dec = eig_decompose(op_);
    const double min_eig = dec.eigenvalues().minCoeff();
    if (min_eig < kEigenvalueClamp) {
        std::ostringstream os;
        os << "density operator: eigenvalue " << min_eig << " below clamp threshold";
        throw ValidationError(os.str());
    }
    if (min_eig < 0.0) {
        Eigen::VectorXd clamped = dec.eigenvalues().cwiseMax(0.0);
        dec = SpectralDecomposition(clamped, dec.eigenvectors());
        op_ = HermitianOperator(dec.reconstruct());
    }
    const double tr = op_.trace();
    if (std::abs(tr - 1.0) > kHermitianTol) {
        std::ostringstream os;
        os << "density operator: trace " << tr << " deviates from 1";
        throw ValidationError(os.str());
    }
    dec_ = std::make_shared<const SpectralDecomposition>(std::move(dec));
}

bool DensityOperator::is_pure(double tol) const {
    return dec_->eigenvalue(0) >= 1.0 - tol;
}

SpectralDecomposition eig_decompose(const Matrix& a) {
    return eig_decompose(HermitianOperator(a));
}

SpectralDecomposition eig_decompose(const HermitianOperator& a) {
    const int d = a.dim();
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a.mat());
    if (solver.info() != Eigen::Success) {
        throw SolverError("eigensolver did not converge on matrix:\n" + dump_matrix(a.mat()));
    }
    // Eigen sorts ascending; flip to descending.
    Eigen::VectorXd vals = solver.eigenvalues().reverse();
    Matrix vecs = solver.eigenvectors().rowwise().reverse();

    int start = 0;
    while (start < d) {
        int end = start + 1;
        while (end < d && vals(end - 1) - vals(end) <= kDegenerateGap) ++end;
        if (end - start > 1) canonicalize_cluster(vecs, start, end - start);
        start = end;
    }
    for (int j = 0; j < d; ++j) fix_phase(vecs.col(j));

    SpectralDecomposition dec(std::move(vals), std::move(vecs));
    const double recon = (dec.reconstruct() - a.mat()).cwiseAbs().maxCoeff();
    if (recon > kSpectralTol) {
        throw SolverError("eigendecomposition reconstruction error " + std::to_string(recon) +
                          " on matrix:\n" + dump_matrix(a.mat()));
    }
    return dec;
}

Matrix tensor(const Matrix& a, const Matrix& b, int dense_cap) {
    const long rows = a.rows() * b.rows();
    const long cols = a.cols() * b.cols();
    if (rows > dense_cap || cols > dense_cap) {
        std::ostringstream os;
        os << "tensor: result dimension " << rows << "x" << cols << " exceeds dense cap "
           << dense_cap;
        throw CapExceededError(os.str());
    }
    Matrix out(rows, cols);
    for (long i = 0; i < a.rows(); ++i) {
        for (long j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b, int dense_cap) {
    return HermitianOperator(tensor(a.mat(), b.mat(), dense_cap));
}

Vector tensor(const Vector& a, const Vector& b, int dense_cap) {
    const long n = a.size() * b.size();
    if (n > dense_cap) {
        throw CapExceededError("tensor: vector dimension " + std::to_string(n) +
                               " exceeds dense cap " + std::to_string(dense_cap));
    }
    Vector out(n);
    for (long i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

Matrix kron_all(const std::vector<const Matrix*>& factors, int dense_cap) {
    if (factors.empty()) return Matrix::Identity(1, 1);
    Matrix out = *factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) out = tensor(out, *factors[i], dense_cap);
    return out;
}

Vector kron_apply(const std::vector<const Matrix*>& factors, const Vector& v) {
    const int n = static_cast<int>(factors.size());
    long dim = 1;
    for (const Matrix* f : factors) dim *= f->rows();
    if (dim != v.size()) {
        throw ValidationError("kron_apply: vector length does not match factor dimensions");
    }
    // Contract one slot at a time: view the vector as a (left, d, right) tensor
    // and apply the slot matrix to the middle index.
    Vector cur = v;
    long left = 1;
    for (int s = 0; s < n; ++s) {
        const Matrix& f = *factors[s];
        const long d = f.rows();
        const long right = dim / (left * d);
        Vector next(dim);
        for (long l = 0; l < left; ++l) {
            // rows: right index, cols: slot index
            Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>> block(
                cur.data() + l * d * right, right, d);
            Eigen::Map<Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>> out(
                next.data() + l * d * right, right, d);
            out.noalias() = block * f.transpose();
        }
        cur.swap(next);
        left *= d;
    }
    return cur;
}

double trace_norm(const HermitianOperator& a) {
    return eig_decompose(a).eigenvalues().cwiseAbs().sum();
}

double trace_norm(const Matrix& a) { return trace_norm(HermitianOperator(a)); }

std::pair<HermitianOperator, HermitianOperator> positive_negative_parts(
    const HermitianOperator& a) {
    const SpectralDecomposition dec = eig_decompose(a);
    const int d = a.dim();
    Matrix pos = Matrix::Zero(d, d);
    Matrix neg = Matrix::Zero(d, d);
    for (int j = 0; j < d; ++j) {
        const double val = dec.eigenvalue(j);
        if (val > 0.0) {
            pos.noalias() += val * dec.projector(j);
        } else if (val < 0.0) {
            neg.noalias() -= val * dec.projector(j);
        }
    }
    return {HermitianOperator(pos), HermitianOperator(neg)};
}

double von_neumann_entropy(const DensityOperator& rho) {
    return shannon_entropy(rho.decomposition().eigenvalue_list());
}

Matrix sqrt_psd(const Matrix& a, double tol) {
    const SpectralDecomposition dec = eig_decompose(a);
    if (dec.eigenvalues().minCoeff() < -tol) {
        throw ValidationError("sqrt_psd: matrix has eigenvalue " +
                              std::to_string(dec.eigenvalues().minCoeff()) +
                              " below -tolerance");
    }
    Eigen::VectorXd roots = dec.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return dec.eigenvectors() * roots.asDiagonal().toDenseMatrix().cast<Complex>() *
           dec.eigenvectors().adjoint();
}

Matrix psd_factor(const Matrix& a, double cut) {
    const SpectralDecomposition dec = eig_decompose(a);
    if (dec.eigenvalues().minCoeff() < -kPsdTol) {
        throw ValidationError("psd_factor: matrix has eigenvalue " +
                              std::to_string(dec.eigenvalues().minCoeff()) +
                              " below -tolerance");
    }
    std::vector<int> kept;
    for (int j = 0; j < dec.dim(); ++j) {
        if (dec.eigenvalues()(j) > cut) {
            kept.push_back(j);
        }
    }
    Matrix f(dec.dim(), static_cast<int>(kept.size()));
    for (std::size_t c = 0; c < kept.size(); ++c) {
        f.col(static_cast<int>(c)) =
            dec.eigenvectors().col(kept[c]) * std::sqrt(dec.eigenvalues()(kept[c]));
    }
    return f;
}

double min_eigenvalue(const Matrix& a) {
    return Eigen::SelfAdjointEigenSolver<Matrix>(0.5 * (a + a.adjoint()), Eigen::EigenvaluesOnly)
        .eigenvalues()
        .minCoeff();
}

double max_eigenvalue(const Matrix& a) {
    return Eigen::SelfAdjointEigenSolver<Matrix>(0.5 * (a + a.adjoint()), Eigen::EigenvaluesOnly)
        .eigenvalues()
        .maxCoeff();
}

bool operator_leq(const Matrix& a, const Matrix& b, double tol) {
    return min_eigenvalue(b - a) >= -tol;
}

} // namespace cqcap
