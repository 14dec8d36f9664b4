#include "cqcap/random.hpp"

#include <cmath>
#include <numbers>

#include "cqcap/errors.hpp"

namespace cqcap {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t RandomStream::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

double RandomStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u = 1.0 - uniform(); // (0, 1], keeps the log finite
    const double r = std::sqrt(-2.0 * std::log(u));
    const double theta = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

int RandomStream::uniform_int(int n) {
    if (n <= 0) {
        throw ValidationError("uniform_int needs a positive range");
    }
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = (UINT64_MAX / un) * un;
    std::uint64_t r = next_u64();
    while (r >= limit) {
        r = next_u64();
    }
    return static_cast<int>(r % un);
}

Vector RandomStream::ket(int d) {
    if (d <= 0) {
        throw ValidationError("dimension must be positive");
    }
    Vector v(d);
    for (int i = 0; i < d; ++i) {
        const double re = normal();
        const double im = normal();
        v(i) = Complex(re, im);
    }
    return v / v.norm();
}

DensityOperator RandomStream::pure_state(int d) {
    const Vector v = ket(d);
    return DensityOperator(v * v.adjoint());
}

DensityOperator RandomStream::mixed_state(int d, int rank) {
    if (d <= 0) {
        throw ValidationError("dimension must be positive");
    }
    if (rank <= 0 || rank > d) {
        rank = d;
    }
    Matrix g(d, rank);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < rank; ++j) {
            const double re = normal();
            const double im = normal();
            g(i, j) = Complex(re, im);
        }
    }
    Matrix rho = g * g.adjoint();
    rho /= rho.trace();
    return DensityOperator(rho);
}

HermitianOperator RandomStream::contraction(int d) {
    if (d <= 0) {
        throw ValidationError("dimension must be positive");
    }
    Matrix a(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const double re = normal();
            const double im = normal();
            a(i, j) = Complex(re, im);
        }
    }
    const Matrix h = 0.5 * (a + a.adjoint());
    const double lo = min_eigenvalue(h);
    const double hi = max_eigenvalue(h);
    if (hi - lo < 1e-12) {
        return HermitianOperator(0.5 * Matrix::Identity(d, d));
    }
    return HermitianOperator((h - lo * Matrix::Identity(d, d)) / (hi - lo));
}

CqChannel RandomStream::channel(int a, int d) {
    std::vector<DensityOperator> states;
    states.reserve(static_cast<std::size_t>(a));
    for (int x = 0; x < a; ++x) {
        states.push_back(mixed_state(d));
    }
    return CqChannel(states);
}

CqChannel RandomStream::commuting_channel(int a, int d) {
    std::vector<DensityOperator> states;
    states.reserve(static_cast<std::size_t>(a));
    for (int x = 0; x < a; ++x) {
        const InputDistribution probs = distribution(d);
        Matrix diag = Matrix::Zero(d, d);
        for (int k = 0; k < d; ++k) {
            diag(k, k) = Complex(probs(k), 0.0);
        }
        states.emplace_back(diag);
    }
    return CqChannel(states);
}

InputDistribution RandomStream::distribution(int a) {
    if (a <= 0) {
        throw ValidationError("alphabet size must be positive");
    }
    std::vector<double> p(static_cast<std::size_t>(a));
    double total = 0.0;
    for (double& v : p) {
        v = -std::log(1.0 - uniform());
        total += v;
    }
    for (double& v : p) {
        v /= total;
    }
    return InputDistribution(p);
}

std::vector<Matrix> RandomStream::povm(int d, int outcomes) {
    if (d <= 0 || outcomes <= 0) {
        throw ValidationError("dimension and outcome count must be positive");
    }
    std::vector<Matrix> piles;
    piles.reserve(static_cast<std::size_t>(outcomes));
    Matrix sum = Matrix::Zero(d, d);
    for (int y = 0; y < outcomes; ++y) {
        Matrix g(d, d);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                const double re = normal();
                const double im = normal();
                g(i, j) = Complex(re, im);
            }
        }
        piles.push_back(g * g.adjoint());
        sum += piles.back();
    }
    const SpectralDecomposition dec = eig_decompose(sum);
    Matrix root_inv = Matrix::Zero(d, d);
    for (int j = 0; j < d; ++j) {
        root_inv.noalias() += dec.projector(j) / std::sqrt(dec.eigenvalues()(j));
    }
    for (Matrix& e : piles) {
        e = root_inv * e * root_inv;
    }
    return piles;
}

Word RandomStream::word(int n, int a) {
    Word w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        w[static_cast<std::size_t>(i)] = uniform_int(a);
    }
    return w;
}

void RandomStream::shuffle(Word& w) {
    for (int i = static_cast<int>(w.size()) - 1; i > 0; --i) {
        const int j = uniform_int(i + 1);
        std::swap(w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(j)]);
    }
}

} // namespace cqcap
