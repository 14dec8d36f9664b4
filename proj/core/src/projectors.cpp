#include "cqcap/projectors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cqcap/errors.hpp"

namespace cqcap {

namespace {

constexpr double kOrderTol = 1e-9;     // operator-order and overlap slack
constexpr double kTraceRelTol = 1e-6;  // relative slack on counting bounds

bool same_decomposition(const SpectralDecomposition& x, const SpectralDecomposition& y) {
    if (&x == &y) return true;
    if (x.eigenvectors().rows() != y.eigenvectors().rows()) return false;
    if (x.eigenvalue_list() != y.eigenvalue_list()) return false;
    return (x.eigenvectors() - y.eigenvectors()).cwiseAbs().maxCoeff() == 0.0;
}

InputDistribution renormalized_distribution(std::vector<double> weights) {
    double total = 0.0;
    for (double v : weights) total += v;
    if (total <= 0.0) throw ValidationError("weights must have positive total");
    for (double& v : weights) v /= total;
    return InputDistribution(weights);
}

std::vector<std::vector<int>> positions_by_letter(const Word& word, int alphabet_size) {
    std::vector<std::vector<int>> pos(static_cast<std::size_t>(alphabet_size));
    for (int i = 0; i < static_cast<int>(word.size()); ++i) {
        int x = word[static_cast<std::size_t>(i)];
        if (x < 0 || x >= alphabet_size) throw ValidationError("word letter out of range");
        pos[static_cast<std::size_t>(x)].push_back(i);
    }
    return pos;
}

// Interleaves per-letter block words into full-length sequences, one per
// combination of block choices.
std::vector<Word> compose_blocks(const std::vector<std::vector<int>>& positions,
                                 const std::vector<std::vector<Word>>& blocks_by_letter,
                                 std::size_t word_length, std::int64_t cap) {
    const std::size_t a = positions.size();
    double total = 1.0;
    std::vector<std::size_t> active;
    for (std::size_t x = 0; x < a; ++x) {
        if (positions[x].empty()) continue;
        active.push_back(x);
        total *= static_cast<double>(blocks_by_letter[x].size());
    }
    if (total > static_cast<double>(cap))
        throw CapExceededError("composed member count exceeds the enumeration cap");

    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(total));
    std::vector<std::size_t> choice(active.size(), 0);
    while (true) {
        Word seq(word_length, 0);
        for (std::size_t k = 0; k < active.size(); ++k) {
            const std::size_t x = active[k];
            const Word& block = blocks_by_letter[x][choice[k]];
            for (std::size_t t = 0; t < block.size(); ++t)
                seq[static_cast<std::size_t>(positions[x][t])] = block[t];
        }
        out.push_back(std::move(seq));
        std::size_t k = active.size();
        while (k > 0) {
            --k;
            if (++choice[k] < blocks_by_letter[active[k]].size()) break;
            choice[k] = 0;
            if (k == 0) return out;
        }
        if (active.empty()) return out;
    }
}

} // namespace

std::int64_t ProductEigenbasis::dense_dim(std::int64_t cap) const {
    std::int64_t dim = 1;
    for (const auto& f : factors) {
        dim *= f->eigenvectors().rows();
        if (dim > cap) throw CapExceededError("product dimension exceeds the dense cap");
    }
    return dim;
}

TypicalProjector::TypicalProjector(ProductEigenbasis basis, std::vector<Word> sequences)
    : basis_(std::move(basis)), sequences_(std::move(sequences)) {
    const auto slots = static_cast<std::size_t>(basis_.slots());
    for (const auto& seq : sequences_) {
        if (seq.size() != slots) throw ValidationError("sequence length must match slot count");
        for (std::size_t i = 0; i < slots; ++i) {
            if (seq[i] < 0 || seq[i] >= basis_.factor(static_cast<int>(i)).eigenvectors().rows())
                throw ValidationError("eigenindex out of range");
        }
    }
    std::sort(sequences_.begin(), sequences_.end());
    sequences_.erase(std::unique(sequences_.begin(), sequences_.end()), sequences_.end());
}

bool TypicalProjector::contains(const Word& j) const {
    return std::binary_search(sequences_.begin(), sequences_.end(), j);
}

Vector TypicalProjector::basis_column(const Word& j) const {
    const std::int64_t dim = basis_.dense_dim(std::numeric_limits<int>::max());
    Vector v = basis_.factor(0).eigenvectors().col(j.at(0));
    for (int i = 1; i < basis_.slots(); ++i)
        v = tensor(v, Vector(basis_.factor(i).eigenvectors().col(j.at(static_cast<std::size_t>(i)))),
                   static_cast<int>(dim));
    return v;
}

Matrix TypicalProjector::densify(int dense_cap) const {
    const std::int64_t dim = basis_.dense_dim(dense_cap);
    Matrix out = Matrix::Zero(dim, dim);
    for (const auto& seq : sequences_) {
        const Vector v = basis_column(seq);
        out.noalias() += v * v.adjoint();
    }
    return out;
}

TypicalProjector typical_projector(std::shared_ptr<const SpectralDecomposition> dec, int n,
                                   double delta, std::int64_t enumeration_cap) {
    if (n < 1) throw ValidationError("block length must be at least 1");
    TypicalSetSpec spec{renormalized_distribution(dec->eigenvalue_list()), n, delta};
    std::vector<Word> sequences = enumerate_typical_set(spec, enumeration_cap);
    ProductEigenbasis basis;
    basis.factors.assign(static_cast<std::size_t>(n), std::move(dec));
    return TypicalProjector(std::move(basis), std::move(sequences));
}

TypicalProjector typical_projector(const DensityOperator& rho, int n, double delta,
                                   std::int64_t enumeration_cap) {
    return typical_projector(rho.decomposition_ptr(), n, delta, enumeration_cap);
}

double overlap_with_tensor_power(const TypicalProjector& pi, const DensityOperator& rho) {
    const auto& dec = rho.decomposition();
    for (int i = 0; i < pi.basis().slots(); ++i) {
        if (!same_decomposition(pi.basis().factor(i), dec))
            throw ValidationError("projector basis does not match the state's decomposition");
    }
    const auto& vals = dec.eigenvalue_list();
    double overlap = 0.0;
    for (const auto& seq : pi.sequences()) {
        double prod = 1.0;
        for (int j : seq) prod *= vals[static_cast<std::size_t>(j)];
        overlap += prod;
    }
    return overlap;
}

bool ProjectorReport::all_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

ProjectorReport typical_projector_bounds_check(const DensityOperator& rho, int n, double delta,
                                               std::int64_t enumeration_cap) {
    const int d = rho.dim();
    const TypicalProjector pi = typical_projector(rho, n, delta, enumeration_cap);
    const auto& vals = rho.decomposition().eigenvalue_list();

    ProjectorReport r;
    r.trace = pi.trace();
    r.entropy_bits = shannon_entropy(vals);
    r.band_bits = kTypicalityK * d * delta * std::sqrt(static_cast<double>(n));
    const double nh = n * r.entropy_bits;

    double worst_dev = 0.0;
    const Word* worst_seq = nullptr;
    for (const auto& seq : pi.sequences()) {
        double lp = 0.0;
        for (int j : seq) lp -= std::log2(vals[static_cast<std::size_t>(j)]);
        const double dev = std::abs(lp - nh);
        if (dev > worst_dev) {
            worst_dev = dev;
            worst_seq = &seq;
        }
    }
    r.overlap = overlap_with_tensor_power(pi, rho);

    const double lambda = d / (delta * delta);
    r.checks.push_back(floor_check("overlap_floor", r.overlap, 1.0 - lambda, 1e-12,
                                   /*vacuous=*/1.0 - lambda <= 0.0));
    BoundCheck band = ceiling_check("member_logprob_band", worst_dev, r.band_bits, kOrderTol);
    if (worst_seq != nullptr && !band.pass) band.witness = word_to_string(*worst_seq);
    r.checks.push_back(std::move(band));
    const double m = static_cast<double>(r.trace);
    r.checks.push_back(
        ceiling_check("trace_ceiling", m, std::exp2(nh + r.band_bits), kTraceRelTol));
    r.checks.push_back(floor_check("trace_floor", m,
                                   (1.0 - lambda) * std::exp2(nh - r.band_bits), kTraceRelTol,
                                   /*vacuous=*/1.0 - lambda <= 0.0));
    r.checks.push_back(floor_check("shadow_floor", m,
                                   (r.overlap - lambda) * std::exp2(nh - r.band_bits),
                                   kTraceRelTol, /*vacuous=*/r.overlap - lambda <= 0.0));
    return r;
}

ShadowWitness::ShadowWitness(HermitianOperator b, double eta, const Matrix& rho)
    : b_(std::move(b)), eta_(eta) {
    if (min_eigenvalue(b_.mat()) < -kPsdTol || max_eigenvalue(b_.mat()) > 1.0 + kPsdTol)
        throw ValidationError("shadow operator must satisfy 0 <= B <= I");
    if (rho.rows() != b_.mat().rows()) throw ValidationError("shadow dimension mismatch");
    const double overlap = std::real((rho * b_.mat()).trace());
    if (overlap < eta_ - kOrderTol)
        throw ValidationError("claimed shadow overlap is not achieved");
}

bool ShadowBoundReport::preconditions_hold() const {
    for (const auto& c : preconditions) {
        if (!c.pass) return false;
    }
    return true;
}

bool ShadowBoundReport::all_pass() const {
    if (!preconditions_hold()) return false;
    for (const auto& c : conclusions) {
        if (!c.pass) return false;
    }
    return true;
}

ShadowBoundReport shadow_bound(const Matrix& lambda_op, const Matrix& rho, double lambda,
                               double mu1, double mu2, const ShadowWitness& b) {
    if (lambda < 0.0 || lambda > 1.0) throw ValidationError("lambda must lie in [0, 1]");
    if (!(mu2 > 0.0)) throw ValidationError("mu2 must be positive");
    if (mu1 < 0.0 || mu1 > mu2) throw ValidationError("need 0 <= mu1 <= mu2");
    if (lambda_op.rows() != rho.rows()) throw ValidationError("operator dimension mismatch");

    ShadowBoundReport r;
    const double range_margin =
        std::min(min_eigenvalue(lambda_op), 1.0 - max_eigenvalue(lambda_op));
    r.preconditions.push_back(floor_check("operator_range", range_margin, 0.0, kOrderTol));
    const double comm = (lambda_op * rho - rho * lambda_op).cwiseAbs().maxCoeff();
    r.preconditions.push_back(ceiling_check("commutes", comm, 0.0, kOrderTol));
    const double overlap = std::real((rho * lambda_op).trace());
    r.preconditions.push_back(floor_check("state_overlap", overlap, 1.0 - lambda, kOrderTol));
    const Matrix root = sqrt_psd(lambda_op);
    const Matrix pinched = root * rho * root;
    r.preconditions.push_back(
        floor_check("order_lower", min_eigenvalue(pinched - mu1 * lambda_op), 0.0, kOrderTol));
    r.preconditions.push_back(
        floor_check("order_upper", min_eigenvalue(mu2 * lambda_op - pinched), 0.0, kOrderTol));

    const double tr = std::real(lambda_op.trace());
    r.conclusions.push_back(floor_check("trace_floor", tr, (1.0 - lambda) / mu2, kOrderTol));
    r.conclusions.push_back(ceiling_check("trace_ceiling", tr,
                                          mu1 > 0.0 ? 1.0 / mu1
                                                    : std::numeric_limits<double>::infinity(),
                                          kOrderTol, /*vacuous=*/mu1 <= 0.0));
    const double tr_b = std::real(b.op().mat().trace());
    r.conclusions.push_back(floor_check("shadow_floor", tr_b, (b.eta() - lambda) / mu2, kOrderTol,
                                        /*vacuous=*/b.eta() - lambda <= 0.0));
    return r;
}

TypicalProjector conditional_typical_projector(const CqChannel& w, const Word& word, double delta,
                                               std::int64_t enumeration_cap) {
    if (word.empty()) throw ValidationError("word must be nonempty");
    const int a = w.alphabet_size();
    const auto positions = positions_by_letter(word, a);

    std::vector<std::vector<Word>> blocks(static_cast<std::size_t>(a));
    for (int x = 0; x < a; ++x) {
        const auto ux = static_cast<std::size_t>(x);
        const int m = static_cast<int>(positions[ux].size());
        if (m == 0) continue;
        TypicalSetSpec spec{
            renormalized_distribution(w.state(x).decomposition().eigenvalue_list()), m, delta};
        blocks[ux] = enumerate_typical_set(spec, enumeration_cap);
    }
    std::vector<Word> sequences = compose_blocks(positions, blocks, word.size(), enumeration_cap);

    ProductEigenbasis basis;
    basis.factors.reserve(word.size());
    for (int x : word) basis.factors.push_back(w.state(x).decomposition_ptr());
    return TypicalProjector(std::move(basis), std::move(sequences));
}

ProjectorReport conditional_projector_bounds_check(const CqChannel& w, const Word& word,
                                                   double delta, std::int64_t enumeration_cap) {
    if (word.empty()) throw ValidationError("word must be nonempty");
    const int a = w.alphabet_size();
    const int d = w.dim();
    const int n = static_cast<int>(word.size());
    const auto positions = positions_by_letter(word, a);

    ProjectorReport r;
    r.band_bits = kTypicalityK * d * std::sqrt(static_cast<double>(a)) * delta *
                  std::sqrt(static_cast<double>(n));

    // Per-letter blocks: the member set, overlap, and log-product extremes
    // combine multiplicatively (additively in the log) across letters.
    double trace_product = 1.0;
    double overlap = 1.0;
    double nh = 0.0;
    double dev_hi = 0.0;
    double dev_lo = 0.0;
    Word witness_hi(word.size(), 0);
    Word witness_lo(word.size(), 0);
    for (int x = 0; x < a; ++x) {
        const auto ux = static_cast<std::size_t>(x);
        const int m = static_cast<int>(positions[ux].size());
        if (m == 0) continue;
        const TypicalProjector t =
            typical_projector(w.state(x).decomposition_ptr(), m, delta, enumeration_cap);
        const auto& vals = w.state(x).decomposition().eigenvalue_list();
        const double hx = shannon_entropy(vals);
        nh += m * hx;
        trace_product *= static_cast<double>(t.trace());
        overlap *= overlap_with_tensor_power(t, w.state(x));

        double block_hi = -std::numeric_limits<double>::infinity();
        double block_lo = std::numeric_limits<double>::infinity();
        const Word* arg_hi = nullptr;
        const Word* arg_lo = nullptr;
        for (const auto& block : t.sequences()) {
            double lp = 0.0;
            for (int j : block) lp -= std::log2(vals[static_cast<std::size_t>(j)]);
            const double dev = lp - m * hx;
            if (dev > block_hi) {
                block_hi = dev;
                arg_hi = &block;
            }
            if (dev < block_lo) {
                block_lo = dev;
                arg_lo = &block;
            }
        }
        dev_hi += block_hi;
        dev_lo += block_lo;
        for (int t_i = 0; t_i < m; ++t_i) {
            witness_hi[static_cast<std::size_t>(positions[ux][static_cast<std::size_t>(t_i)])] =
                (*arg_hi)[static_cast<std::size_t>(t_i)];
            witness_lo[static_cast<std::size_t>(positions[ux][static_cast<std::size_t>(t_i)])] =
                (*arg_lo)[static_cast<std::size_t>(t_i)];
        }
    }

    r.overlap = overlap;
    r.entropy_bits = nh / n;
    if (trace_product > 9e18) throw CapExceededError("member count exceeds a 64-bit trace");
    r.trace = static_cast<std::int64_t>(std::llround(trace_product));

    const double lambda = a * d / (delta * delta);
    r.checks.push_back(floor_check("overlap_floor", overlap, 1.0 - lambda, 1e-12,
                                   /*vacuous=*/1.0 - lambda <= 0.0));
    const double worst_dev = std::max(dev_hi, -dev_lo);
    BoundCheck band = ceiling_check("member_logprob_band", worst_dev, r.band_bits, kOrderTol);
    if (!band.pass) band.witness = word_to_string(dev_hi >= -dev_lo ? witness_hi : witness_lo);
    r.checks.push_back(std::move(band));
    r.checks.push_back(ceiling_check("trace_ceiling", trace_product,
                                     std::exp2(nh + r.band_bits), kTraceRelTol));
    r.checks.push_back(floor_check("trace_floor", trace_product,
                                   (1.0 - lambda) * std::exp2(nh - r.band_bits), kTraceRelTol,
                                   /*vacuous=*/1.0 - lambda <= 0.0));
    r.checks.push_back(floor_check("shadow_floor", trace_product,
                                   (overlap - lambda) * std::exp2(nh - r.band_bits), kTraceRelTol,
                                   /*vacuous=*/overlap - lambda <= 0.0));
    return r;
}

DensityOperator pinch(const SpectralDecomposition& basis, const DensityOperator& sigma) {
    const Matrix& u = basis.eigenvectors();
    if (u.rows() != sigma.mat().rows()) throw ValidationError("pinch dimension mismatch");
    const Matrix rotated = u.adjoint() * sigma.mat() * u;
    return DensityOperator(
        Matrix(u * rotated.diagonal().real().cast<Complex>().asDiagonal() * u.adjoint()));
}

bool WeakLawReport::all_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

WeakLawReport weak_law_check(const CqChannel& w, const InputDistribution& p, const Word& word,
                             double delta, int dense_cap, std::int64_t enumeration_cap) {
    const int a = w.alphabet_size();
    const int d = w.dim();
    const int n = static_cast<int>(word.size());
    if (p.size() != a) throw ValidationError("distribution size must match channel alphabet");
    if (n < 1) throw ValidationError("word must be nonempty");
    const auto positions = positions_by_letter(word, a);
    for (int x = 0; x < a; ++x) {
        const double expected = n * p(x);
        if (std::abs(expected - static_cast<double>(positions[static_cast<std::size_t>(x)].size())) >
            1e-9)
            throw ValidationError("word must have exact type P");
    }

    std::int64_t dim = 1;
    for (int i = 0; i < n; ++i) {
        dim *= d;
        if (dim > dense_cap) throw CapExceededError("d^n exceeds the dense cap");
    }

    const DensityOperator avg = average_state(w, p);
    const TypicalProjector pi =
        typical_projector(avg.decomposition_ptr(), n, delta * std::sqrt(static_cast<double>(a)),
                          enumeration_cap);

    WeakLawReport r;
    r.trace = pi.trace();

    // Dense overlap Tr(W_{x^n} Pi), one product-basis column at a time.
    std::vector<const Matrix*> factors;
    factors.reserve(static_cast<std::size_t>(n));
    for (int x : word) factors.push_back(&w.state(x).mat());
    for (const auto& seq : pi.sequences()) {
        const Vector v = pi.basis_column(seq);
        r.overlap += std::real(v.dot(kron_apply(factors, v)));
    }

    // Diagonal weights of each letter state in the eigenbasis of PW, kept in
    // that basis's index order.
    const Matrix& u = avg.decomposition().eigenvectors();
    std::vector<std::vector<double>> q(static_cast<std::size_t>(a));
    for (int x = 0; x < a; ++x) {
        const Matrix rotated = u.adjoint() * w.state(x).mat() * u;
        auto& qx = q[static_cast<std::size_t>(x)];
        qx.resize(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) qx[static_cast<std::size_t>(j)] = std::real(rotated(j, j));
    }

    double overlap_by_products = 0.0;
    for (const auto& seq : pi.sequences()) {
        double prod = 1.0;
        for (int i = 0; i < n; ++i)
            prod *= q[static_cast<std::size_t>(word[static_cast<std::size_t>(i)])]
                     [static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])];
        overlap_by_products += prod;
    }

    // Pinched channel's conditional member set, block by block.
    std::vector<std::vector<Word>> blocks(static_cast<std::size_t>(a));
    double pinched_overlap = 1.0;
    for (int x = 0; x < a; ++x) {
        const auto ux = static_cast<std::size_t>(x);
        const int m = static_cast<int>(positions[ux].size());
        if (m == 0) continue;
        TypicalSetSpec spec{renormalized_distribution(q[ux]), m, delta};
        blocks[ux] = enumerate_typical_set(spec, enumeration_cap);
        double block_overlap = 0.0;
        for (const auto& block : blocks[ux]) {
            double prod = 1.0;
            for (int j : block) prod *= q[ux][static_cast<std::size_t>(j)];
            block_overlap += prod;
        }
        pinched_overlap *= block_overlap;
    }
    r.pinched_overlap = pinched_overlap;

    const std::vector<Word> pinched_members =
        compose_blocks(positions, blocks, word.size(), enumeration_cap);
    std::int64_t included = 0;
    const Word* first_missing = nullptr;
    for (const auto& seq : pinched_members) {
        if (pi.contains(seq)) {
            ++included;
        } else if (first_missing == nullptr) {
            first_missing = &seq;
        }
    }

    const double lambda = a * d / (delta * delta);
    r.checks.push_back(floor_check("overlap_floor", r.overlap, 1.0 - lambda, kOrderTol,
                                   /*vacuous=*/1.0 - lambda <= 0.0));
    BoundCheck inclusion;
    inclusion.name = "pinched_set_inclusion";
    inclusion.bound = static_cast<double>(pinched_members.size());
    inclusion.achieved = static_cast<double>(included);
    inclusion.slack = inclusion.achieved - inclusion.bound;
    inclusion.pass = included == static_cast<std::int64_t>(pinched_members.size());
    if (first_missing != nullptr) inclusion.witness = word_to_string(*first_missing);
    r.checks.push_back(std::move(inclusion));
    r.checks.push_back(floor_check("pinched_overlap_floor", pinched_overlap, 1.0 - lambda,
                                   kOrderTol, /*vacuous=*/1.0 - lambda <= 0.0));
    r.checks.push_back(floor_check("dense_dominates_pinched", r.overlap, pinched_overlap,
                                   kOrderTol, /*vacuous=*/first_missing != nullptr));
    r.checks.push_back(ceiling_check("product_form_agreement",
                                     std::abs(r.overlap - overlap_by_products), 0.0, kOrderTol));
    return r;
}

} // namespace cqcap
