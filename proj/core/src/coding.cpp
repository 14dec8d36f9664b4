#include "cqcap/coding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

#include "cqcap/errors.hpp"
#include "cqcap/projectors.hpp"

namespace cqcap {

namespace {

constexpr double kOrderTol = 1e-9;         // operator-order and overlap slack
constexpr double kTraceRelTol = 1e-6;      // counting bounds, relative
constexpr double kSupportCut = 1e-12;      // eigenvalues above this count as support
constexpr double kSupportBandFloor = 1e-13; // below the cut but above this is ambiguous

int dense_dimension(int d, int n, int dense_cap) {
    std::int64_t dim = 1;
    for (int i = 0; i < n; ++i) {
        dim *= d;
        if (dim > dense_cap) {
            throw CapExceededError("block dimension " + std::to_string(d) + "^" +
                                   std::to_string(n) + " exceeds dense cap " +
                                   std::to_string(dense_cap));
        }
    }
    return static_cast<int>(dim);
}

std::vector<const Matrix*> letter_factors(const CqChannel& w, const Word& word) {
    std::vector<const Matrix*> factors;
    factors.reserve(word.size());
    for (int x : word) {
        factors.push_back(&w.state(x).mat());
    }
    return factors;
}

// Tr(W_{x^n} F F^dagger) without forming the dense element.
double channel_weight(const CqChannel& w, const Word& word, const Matrix& f) {
    const std::vector<const Matrix*> factors = letter_factors(w, word);
    double s = 0.0;
    for (int j = 0; j < f.cols(); ++j) {
        s += std::real(f.col(j).dot(kron_apply(factors, f.col(j))));
    }
    return s;
}

Matrix support_projector(const Matrix& dense, bool police_band) {
    const SpectralDecomposition dec = eig_decompose(dense);
    Matrix proj = Matrix::Zero(dec.dim(), dec.dim());
    for (int j = 0; j < dec.dim(); ++j) {
        const double val = dec.eigenvalues()(j);
        if (val >= kSupportCut) {
            proj.noalias() += dec.projector(j);
        } else if (police_band && val >= kSupportBandFloor) {
            throw SolverError("support eigenvalue " + std::to_string(val) +
                              " falls inside the ambiguity band [1e-13, 1e-12)");
        }
    }
    return proj;
}

// Running accumulator B of the greedy scan plus the transform G applied to
// candidate columns: G = sqrt(I - B) for the sandwich rule, G = I - B when B
// collects support projectors.
class Accumulator {
  public:
    Accumulator(int dim, GreedyStyle style) : dim_(dim), style_(style) {}

    bool empty() const { return empty_; }
    const Matrix& b() const { return b_; } // valid only when not empty

    Matrix transformed(const Matrix& u) const {
        if (empty_) {
            return u;
        }
        return g_.selfadjointView<Eigen::Lower>() * u;
    }

    void add_element(const Matrix& dense) {
        if (empty_) {
            b_ = Matrix::Zero(dim_, dim_);
            empty_ = false;
        }
        if (style_ == GreedyStyle::sandwich) {
            b_ += dense;
            g_ = sqrt_psd(Matrix::Identity(dim_, dim_) - b_);
        } else {
            b_ += support_projector(dense, false);
            g_ = Matrix::Identity(dim_, dim_) - b_;
        }
    }

  private:
    int dim_;
    GreedyStyle style_;
    bool empty_ = true;
    Matrix b_;
    Matrix g_;
};

// Cheap rejection: G Pi G <= G^2 <= I - B up to the eigenvalue clamp, so
// Tr(W G Pi G) <= 1 - Tr(W B) + 1e-9. A candidate below the acceptance
// threshold by more than that margin cannot score high enough.
bool screened_out(const CqChannel& w, const Word& word, const Matrix& b, double lambda,
                  int dense_cap) {
    const Matrix wd = kron_all(letter_factors(w, word), dense_cap);
    const double tr_wb = std::real(wd.transpose().cwiseProduct(b).sum());
    return 1.0 - tr_wb < 1.0 - lambda - 1e-8;
}

struct Scored {
    double score = 0.0;
    Matrix gu; // transformed member columns; the accepted element is gu gu^dagger
};

Scored score_candidate(const CqChannel& w, const Word& word, const GreedyParams& params,
                       const Accumulator& acc, int dim, std::int64_t enumeration_cap) {
    const TypicalProjector pi =
        conditional_typical_projector(w, word, params.delta(), enumeration_cap);
    const std::vector<Word>& seqs = pi.sequences();
    Scored out;
    if (seqs.empty()) {
        out.gu = Matrix(dim, 0);
        return out;
    }
    Matrix u(dim, static_cast<int>(seqs.size()));
    for (std::size_t j = 0; j < seqs.size(); ++j) {
        u.col(static_cast<int>(j)) = pi.basis_column(seqs[j]);
    }
    out.gu = acc.transformed(u);
    const std::vector<const Matrix*> factors = letter_factors(w, word);
    for (int j = 0; j < out.gu.cols(); ++j) {
        out.score += std::real(out.gu.col(j).dot(kron_apply(factors, out.gu.col(j))));
    }
    return out;
}

std::vector<Word> admissible_candidates(const InputDistribution& p, int n,
                                        const GreedyParams& params,
                                        const std::function<bool(const Word&)>& admissible,
                                        std::int64_t enumeration_cap) {
    std::vector<Word> candidates =
        enumerate_typical_set(TypicalSetSpec{p, n, params.candidate_delta()}, enumeration_cap);
    if (admissible) {
        std::erase_if(candidates, [&](const Word& word) { return !admissible(word); });
    }
    return candidates;
}

void check_channel_match(const Code& code, const CqChannel& w) {
    for (const Word& word : code.codewords()) {
        for (int x : word) {
            if (x < 0 || x >= w.alphabet_size()) {
                throw ValidationError("codeword letter " + std::to_string(x) +
                                      " outside the channel alphabet");
            }
        }
    }
    std::int64_t dim = 1;
    for (int i = 0; i < code.block_length(); ++i) {
        dim *= w.dim();
        if (dim > code.dim()) {
            break;
        }
    }
    if (dim != code.dim()) {
        throw ValidationError("code dimension " + std::to_string(code.dim()) +
                              " does not match the channel block dimension");
    }
}

std::string composition_key(const Word& word, int alphabet_size) {
    const TypeDistribution type = type_of(word, alphabet_size);
    std::ostringstream os;
    for (std::size_t x = 0; x < type.counts.size(); ++x) {
        if (x > 0) {
            os << ",";
        }
        os << type.counts[x];
    }
    return os.str();
}

} // namespace

Code::Code(int n, int dim, std::vector<Word> codewords, std::vector<Matrix> decoder_factors,
           double lambda)
    : n_(n),
      dim_(dim),
      codewords_(std::move(codewords)),
      factors_(std::move(decoder_factors)),
      lambda_(lambda) {
    if (n_ <= 0) {
        throw ValidationError("code block length must be positive");
    }
    if (dim_ <= 0) {
        throw ValidationError("code dimension must be positive");
    }
    if (!(lambda_ >= 0.0 && lambda_ < 1.0)) {
        throw ValidationError("code error budget lambda must lie in [0, 1)");
    }
    if (codewords_.size() != factors_.size()) {
        throw ValidationError("codeword and decoder element counts differ");
    }
    std::set<Word> seen;
    for (const Word& word : codewords_) {
        if (static_cast<int>(word.size()) != n_) {
            throw ValidationError("codeword length does not match the block length");
        }
        for (int x : word) {
            if (x < 0) {
                throw ValidationError("codeword letters must be nonnegative");
            }
        }
        if (!seen.insert(word).second) {
            throw ValidationError("codewords must be distinct");
        }
    }
    for (const Matrix& f : factors_) {
        if (f.rows() != dim_) {
            throw ValidationError("decoder factor row count does not match the code dimension");
        }
    }
    if (!factors_.empty()) {
        Matrix sum = Matrix::Zero(dim_, dim_);
        for (const Matrix& f : factors_) {
            sum.noalias() += f * f.adjoint();
        }
        const double top = max_eigenvalue(sum);
        if (top > 1.0 + kOrderTol) {
            throw ValidationError("decoder elements sum above the identity by " +
                                  std::to_string(top - 1.0));
        }
    }
}

Matrix Code::dense_element(int m) const {
    const Matrix& f = factors_.at(m);
    return f * f.adjoint();
}

double Code::element_trace(int m) const { return factors_.at(m).squaredNorm(); }

Matrix Code::decoder_sum() const {
    Matrix sum = Matrix::Zero(dim_, dim_);
    for (const Matrix& f : factors_) {
        sum.noalias() += f * f.adjoint();
    }
    return sum;
}

double error_probability(const Code& code, const CqChannel& w, int dense_cap) {
    check_channel_match(code, w);
    if (code.dim() > dense_cap) {
        throw CapExceededError("code dimension " + std::to_string(code.dim()) +
                               " exceeds dense cap " + std::to_string(dense_cap));
    }
    double worst = 0.0;
    for (std::size_t m = 0; m < code.size(); ++m) {
        const double err =
            1.0 - channel_weight(w, code.codeword(static_cast<int>(m)),
                                 code.factor(static_cast<int>(m)));
        worst = std::max(worst, err);
    }
    return worst;
}

GreedyParams::GreedyParams(double lambda_in, double tau_in, int a_in, int d_in)
    : lambda(lambda_in), tau(tau_in), a(a_in), d(d_in) {
    if (!(lambda > 0.0 && lambda < 1.0)) {
        throw ValidationError("greedy lambda must lie in (0, 1)");
    }
    if (!(tau > 0.0 && tau <= 1.0)) {
        throw ValidationError("greedy tau must lie in (0, 1]");
    }
    if (a <= 0 || d <= 0) {
        throw ValidationError("alphabet size and dimension must be positive");
    }
}

double GreedyParams::eta() const { return std::min(1.0 - lambda, lambda * lambda / 32.0); }

double GreedyParams::delta() const { return std::sqrt(2.0 * a * d / lambda); }

double GreedyParams::candidate_delta() const { return std::sqrt(2.0 * a * d / tau); }

double GreedyParams::delta0() const { return std::sqrt(4.0 * d / (eta() * tau)); }

Code greedy_code_build(const CqChannel& w, const InputDistribution& p, int n, double lambda,
                       double tau, const std::function<bool(const Word&)>& admissible,
                       GreedyStyle style, int dense_cap, std::int64_t enumeration_cap) {
    if (p.size() != w.alphabet_size()) {
        throw ValidationError("input distribution size does not match the channel alphabet");
    }
    if (n <= 0) {
        throw ValidationError("block length must be positive");
    }
    const GreedyParams params(lambda, tau, w.alphabet_size(), w.dim());
    const int dim = dense_dimension(w.dim(), n, dense_cap);
    const std::vector<Word> candidates =
        admissible_candidates(p, n, params, admissible, enumeration_cap);

    Accumulator acc(dim, style);
    std::vector<Word> codewords;
    std::vector<Matrix> factors;
    std::set<Word> taken;

    bool changed = true;
    while (changed) {
        changed = false;
        for (const Word& cand : candidates) {
            if (taken.count(cand) != 0) {
                continue;
            }
            if (!acc.empty() && screened_out(w, cand, acc.b(), lambda, dense_cap)) {
                continue;
            }
            Scored scored = score_candidate(w, cand, params, acc, dim, enumeration_cap);
            if (scored.score >= 1.0 - lambda) {
                acc.add_element(scored.gu * scored.gu.adjoint());
                codewords.push_back(cand);
                factors.push_back(std::move(scored.gu));
                taken.insert(cand);
                changed = true;
            }
        }
    }
    return Code(n, dim, std::move(codewords), std::move(factors), lambda);
}

std::optional<Word> find_extension(const Code& code, const CqChannel& w,
                                   const InputDistribution& p, double lambda, double tau,
                                   const std::function<bool(const Word&)>& admissible,
                                   int dense_cap, std::int64_t enumeration_cap) {
    check_channel_match(code, w);
    if (p.size() != w.alphabet_size()) {
        throw ValidationError("input distribution size does not match the channel alphabet");
    }
    if (code.dim() > dense_cap) {
        throw CapExceededError("code dimension " + std::to_string(code.dim()) +
                               " exceeds dense cap " + std::to_string(dense_cap));
    }
    const GreedyParams params(lambda, tau, w.alphabet_size(), w.dim());
    Accumulator acc(code.dim(), GreedyStyle::sandwich);
    for (std::size_t m = 0; m < code.size(); ++m) {
        acc.add_element(code.dense_element(static_cast<int>(m)));
    }
    const std::set<Word> taken(code.codewords().begin(), code.codewords().end());
    for (const Word& cand :
         admissible_candidates(p, code.block_length(), params, admissible, enumeration_cap)) {
        if (taken.count(cand) != 0) {
            continue;
        }
        if (!acc.empty() && screened_out(w, cand, acc.b(), lambda, dense_cap)) {
            continue;
        }
        const Scored scored = score_candidate(w, cand, params, acc, code.dim(), enumeration_cap);
        if (scored.score >= 1.0 - lambda) {
            return cand;
        }
    }
    return std::nullopt;
}

Code vn_decoder_variant(const Code& code) {
    std::vector<Matrix> projector_factors;
    projector_factors.reserve(code.size());
    for (std::size_t m = 0; m < code.size(); ++m) {
        const Matrix proj = support_projector(code.dense_element(static_cast<int>(m)), true);
        projector_factors.push_back(psd_factor(proj, 0.5));
    }
    return Code(code.block_length(), code.dim(), code.codewords(), std::move(projector_factors),
                code.lambda());
}

double theorem2_size_bound(const InputDistribution& p, const CqChannel& w, int n, double lambda,
                           double tau) {
    if (n <= 0) {
        throw ValidationError("block length must be positive");
    }
    const GreedyParams params(lambda, tau, w.alphabet_size(), w.dim());
    const double root_n = std::sqrt(static_cast<double>(n));
    const double root_a = std::sqrt(static_cast<double>(params.a));
    const double log2_d = std::log2(static_cast<double>(params.d));
    const double deviation = kTypicalityK * params.d * params.delta0() +
                             kTypicalityK * params.d * root_a * params.delta() +
                             kTypicalityK * params.a * params.candidate_delta() * log2_d;
    const double constant =
        params.eta() * params.tau / 2.0 - params.d / (params.delta0() * params.delta0());
    return n * mutual_info(w, p) - deviation * root_n + std::log2(constant);
}

double strong_converse_cc_bound(const InputDistribution& p, const CqChannel& w, int n,
                                double lambda) {
    if (!(lambda > 0.0 && lambda < 1.0)) {
        throw ValidationError("lambda must lie in (0, 1)");
    }
    if (n <= 0) {
        throw ValidationError("block length must be positive");
    }
    const double a = static_cast<double>(w.alphabet_size());
    const double d = static_cast<double>(w.dim());
    const double delta = std::sqrt(32.0 * a * d) / (1.0 - lambda);
    return std::log2(4.0 / (1.0 - lambda)) + n * mutual_info(w, p) +
           2.0 * kTypicalityK * d * std::sqrt(a) * delta * std::sqrt(static_cast<double>(n));
}

double strong_converse_full_bound(const CqChannel& w, int n, double lambda,
                                  const CapacityResult& cap) {
    if (!(lambda > 0.0 && lambda < 1.0)) {
        throw ValidationError("lambda must lie in (0, 1)");
    }
    if (n <= 0) {
        throw ValidationError("block length must be positive");
    }
    const double a = static_cast<double>(w.alphabet_size());
    const double d = static_cast<double>(w.dim());
    const double delta = std::sqrt(32.0 * a * d) / (1.0 - lambda);
    return std::log2(4.0 / (1.0 - lambda)) + n * (cap.capacity + cap.gap_bound) +
           2.0 * kTypicalityK * d * std::sqrt(a) * delta * std::sqrt(static_cast<double>(n)) +
           a * std::log2(static_cast<double>(n) + 1.0);
}

ConverseReport constant_composition_converse_report(const Code& code, const CqChannel& w,
                                                    double lambda) {
    check_channel_match(code, w);
    if (code.size() == 0) {
        throw ValidationError("cannot derive a composition from an empty code");
    }
    const TypeDistribution type = type_of(code.codeword(0), w.alphabet_size());
    for (const Word& word : code.codewords()) {
        if (type_of(word, w.alphabet_size()).counts != type.counts) {
            throw ValidationError("code is not of constant composition");
        }
    }
    ConverseReport r;
    r.n = code.block_length();
    r.lambda = lambda;
    r.size = static_cast<std::int64_t>(code.size());
    r.constant_composition = true;
    r.composition = type.as_distribution();
    r.log2_size = std::log2(static_cast<double>(r.size));
    r.bound_log2 = strong_converse_cc_bound(r.composition, w, r.n, lambda);
    r.pass = r.log2_size <= r.bound_log2 + kOrderTol;
    return r;
}

ConverseReport full_converse_report(const Code& code, const CqChannel& w, double lambda,
                                    const CapacityResult& cap) {
    check_channel_match(code, w);
    ConverseReport r;
    r.n = code.block_length();
    r.lambda = lambda;
    r.size = static_cast<std::int64_t>(code.size());
    r.bound_log2 = strong_converse_full_bound(w, r.n, lambda, cap);
    if (r.size == 0) {
        return r;
    }
    const TypeDistribution type = type_of(code.codeword(0), w.alphabet_size());
    r.constant_composition = true;
    for (const Word& word : code.codewords()) {
        if (type_of(word, w.alphabet_size()).counts != type.counts) {
            r.constant_composition = false;
            break;
        }
    }
    if (r.constant_composition) {
        r.composition = type.as_distribution();
    }
    r.log2_size = std::log2(static_cast<double>(r.size));
    r.pass = r.log2_size <= r.bound_log2 + kOrderTol;
    return r;
}

std::vector<Code> split_by_composition(const Code& code) {
    int alphabet = 1;
    for (const Word& word : code.codewords()) {
        for (int x : word) {
            alphabet = std::max(alphabet, x + 1);
        }
    }
    std::vector<std::string> order;
    std::vector<std::vector<int>> groups;
    for (std::size_t m = 0; m < code.size(); ++m) {
        const std::string key = composition_key(code.codeword(static_cast<int>(m)), alphabet);
        auto it = std::find(order.begin(), order.end(), key);
        if (it == order.end()) {
            order.push_back(key);
            groups.emplace_back();
            it = std::prev(order.end());
        }
        groups[static_cast<std::size_t>(it - order.begin())].push_back(static_cast<int>(m));
    }
    std::vector<Code> parts;
    parts.reserve(groups.size());
    for (const std::vector<int>& group : groups) {
        std::vector<Word> words;
        std::vector<Matrix> factors;
        for (int m : group) {
            words.push_back(code.codeword(m));
            factors.push_back(code.factor(m));
        }
        parts.emplace_back(code.block_length(), code.dim(), std::move(words), std::move(factors),
                           code.lambda());
    }
    return parts;
}

Code largest_constant_composition_subcode(const Code& code) {
    std::vector<Code> parts = split_by_composition(code);
    if (parts.empty()) {
        throw ValidationError("cannot extract a subcode from an empty code");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i].size() > parts[best].size()) {
            best = i;
        }
    }
    return parts[best];
}

bool ModifiedDecoderReport::all_pass() const {
    for (const BoundCheck& c : checks) {
        if (!c.pass) {
            return false;
        }
    }
    return true;
}

ModifiedDecoderReport modified_decoder_check(const Code& code, const CqChannel& w, double lambda,
                                             int dense_cap, std::int64_t enumeration_cap) {
    check_channel_match(code, w);
    if (!(lambda > 0.0 && lambda < 1.0)) {
        throw ValidationError("lambda must lie in (0, 1)");
    }
    if (code.dim() > dense_cap) {
        throw CapExceededError("code dimension " + std::to_string(code.dim()) +
                               " exceeds dense cap " + std::to_string(dense_cap));
    }
    ModifiedDecoderReport r;
    r.n = code.block_length();
    r.lambda = lambda;
    r.size = static_cast<std::int64_t>(code.size());
    const double success_floor = (1.0 - lambda) / 2.0;
    if (r.size == 0) {
        r.checks.push_back(floor_check("modified_overlap_floor", 0.0, success_floor, kOrderTol, true));
        r.checks.push_back(floor_check("modified_trace_floor", 0.0, 0.0, kTraceRelTol, true));
        r.checks.push_back(
            ceiling_check("decoder_sum_within_projector", 0.0, 0.0, kOrderTol, true));
        return r;
    }

    const int a = w.alphabet_size();
    const int d = w.dim();
    const TypeDistribution type = type_of(code.codeword(0), a);
    for (const Word& word : code.codewords()) {
        if (type_of(word, a).counts != type.counts) {
            throw ValidationError("modified decoder check needs a constant-composition code");
        }
    }
    const InputDistribution p = type.as_distribution();
    const double delta = std::sqrt(32.0 * a * d) / (1.0 - lambda);
    const double root_a = std::sqrt(static_cast<double>(a));
    const DensityOperator avg = average_state(w, p);
    const TypicalProjector pi =
        typical_projector(avg, r.n, delta * root_a, enumeration_cap);
    r.projector_trace = pi.trace();
    const Matrix pi_dense = pi.densify(dense_cap);

    const double trace_floor =
        (1.0 - lambda) / 4.0 *
        std::exp2(r.n * conditional_entropy(w, p) -
                  kTypicalityK * d * root_a * delta * std::sqrt(static_cast<double>(r.n)));

    double min_overlap = 1.0;
    int overlap_witness = 0;
    double min_trace = std::numeric_limits<double>::infinity();
    int trace_witness = 0;
    double trace_sum = 0.0;
    for (std::size_t m = 0; m < code.size(); ++m) {
        const Matrix conj_factor = pi_dense * code.factor(static_cast<int>(m));
        const double overlap = channel_weight(w, code.codeword(static_cast<int>(m)), conj_factor);
        const double trace = conj_factor.squaredNorm();
        trace_sum += trace;
        if (overlap < min_overlap || m == 0) {
            min_overlap = overlap;
            overlap_witness = static_cast<int>(m);
        }
        if (trace < min_trace) {
            min_trace = trace;
            trace_witness = static_cast<int>(m);
        }
    }

    BoundCheck overlap_check =
        floor_check("modified_overlap_floor", min_overlap, success_floor, kOrderTol);
    if (!overlap_check.pass) {
        overlap_check.witness = "message " + std::to_string(overlap_witness);
    }
    r.checks.push_back(std::move(overlap_check));

    BoundCheck trace_check =
        floor_check("modified_trace_floor", min_trace, trace_floor, kTraceRelTol);
    if (!trace_check.pass) {
        trace_check.witness = "message " + std::to_string(trace_witness);
    }
    r.checks.push_back(std::move(trace_check));

    r.checks.push_back(ceiling_check("decoder_sum_within_projector", trace_sum,
                                     static_cast<double>(r.projector_trace), kOrderTol));
    return r;
}

Eigen::MatrixXd induced_classical_channel(const CqChannel& w, const std::vector<Matrix>& povm) {
    if (povm.empty()) {
        throw ValidationError("measurement needs at least one element");
    }
    const int d = w.dim();
    Matrix sum = Matrix::Zero(d, d);
    for (const Matrix& e : povm) {
        if (e.rows() != d || e.cols() != d) {
            throw ValidationError("measurement element dimension does not match the channel");
        }
        if ((e - e.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
            throw ValidationError("measurement elements must be selfadjoint");
        }
        if (min_eigenvalue(e) < -kOrderTol) {
            throw ValidationError("measurement elements must be positive semidefinite");
        }
        sum += e;
    }
    if ((sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > kOrderTol) {
        throw ValidationError("measurement elements must sum to the identity");
    }
    Eigen::MatrixXd t(w.alphabet_size(), static_cast<int>(povm.size()));
    for (int x = 0; x < w.alphabet_size(); ++x) {
        for (std::size_t y = 0; y < povm.size(); ++y) {
            const double val = std::real((w.state(x).mat() * povm[y]).trace());
            t(x, static_cast<int>(y)) = std::max(val, 0.0);
        }
    }
    return t;
}

HolevoReport holevo_bound_check(const CqChannel& w, const InputDistribution& p,
                                const std::vector<Matrix>& povm) {
    if (p.size() != w.alphabet_size()) {
        throw ValidationError("input distribution size does not match the channel alphabet");
    }
    const Eigen::MatrixXd t = induced_classical_channel(w, povm);
    const int outcomes = static_cast<int>(t.cols());
    std::vector<DensityOperator> rows;
    rows.reserve(static_cast<std::size_t>(t.rows()));
    for (int x = 0; x < t.rows(); ++x) {
        const double total = t.row(x).sum();
        Matrix diag = Matrix::Zero(outcomes, outcomes);
        for (int y = 0; y < outcomes; ++y) {
            diag(y, y) = Complex(t(x, y) / total, 0.0);
        }
        rows.emplace_back(diag);
    }
    const CqChannel embedded(rows);

    HolevoReport r;
    r.classical_bits = mutual_info(embedded, p);
    r.quantum_bits = mutual_info(w, p);
    r.check = ceiling_check("holevo_ceiling", r.classical_bits, r.quantum_bits, kOrderTol);
    return r;
}

} // namespace cqcap
