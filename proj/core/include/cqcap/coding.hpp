#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cqcap/channel.hpp"
#include "cqcap/input_distribution.hpp"
#include "cqcap/operators.hpp"
#include "cqcap/types.hpp"

namespace cqcap {

// Block code with a POVM decoder. Decoder elements are held as low-rank
// factors F_m with D_m = F_m F_m^dagger, so each element is PSD by
// construction; the constructor checks sum_m D_m <= I within 1e-9.
class Code {
  public:
    Code(int n, int dim, std::vector<Word> codewords, std::vector<Matrix> decoder_factors,
         double lambda);

    int block_length() const { return n_; }
    int dim() const { return dim_; }
    std::size_t size() const { return codewords_.size(); }
    double lambda() const { return lambda_; }
    const std::vector<Word>& codewords() const { return codewords_; }
    const Word& codeword(int m) const { return codewords_.at(m); }
    const Matrix& factor(int m) const { return factors_.at(m); }

    Matrix dense_element(int m) const;
    double element_trace(int m) const;
    Matrix decoder_sum() const;

  private:
    int n_ = 0;
    int dim_ = 1;
    std::vector<Word> codewords_;
    std::vector<Matrix> factors_;
    double lambda_ = 0.0;
};

// Maximal-error probability of the code: max_m 1 - Tr(W_{f(m)} D_m).
// An empty code has error 0.
double error_probability(const Code& code, const CqChannel& w,
                         int dense_cap = kDefaultDenseCap);

// Greedy construction parameters. The derived quantities are always
// recomputed from (lambda, tau, a, d), never supplied independently.
struct GreedyParams {
    double lambda = 0.0;
    double tau = 1.0;
    int a = 0;
    int d = 0;

    GreedyParams(double lambda_in, double tau_in, int a_in, int d_in);

    double eta() const;             // min{1 - lambda, lambda^2 / 32}
    double delta() const;           // sqrt(2 a d / lambda), decoder typicality
    double candidate_delta() const; // sqrt(2 a d / tau), candidate set width
    double delta0() const;          // sqrt(4 d / (eta tau))
};

// History rule for the greedy accumulator B.
//   sandwich: B is the running sum of the accepted elements themselves.
//   projector_history: B accumulates the support projector of each accepted
//     element, so B stays a projector throughout and the support-projector
//     decoder variant applies to the result.
enum class GreedyStyle { sandwich, projector_history };

// Greedily builds a maximal code: scans the variance-typical candidates
// inside the admissible set in lexicographic order, forms
// D = sqrt(I - B) Pi(x^n) sqrt(I - B) with Pi the conditional typical
// projector at delta(lambda), and accepts iff Tr(W_{x^n} D) >= 1 - lambda.
// Scanning repeats until a full pass accepts nothing, so the returned code
// cannot be extended by any admissible candidate. An empty admissible
// predicate admits every word.
Code greedy_code_build(const CqChannel& w, const InputDistribution& p, int n, double lambda,
                       double tau,
                       const std::function<bool(const Word&)>& admissible = {},
                       GreedyStyle style = GreedyStyle::sandwich,
                       int dense_cap = kDefaultDenseCap,
                       std::int64_t enumeration_cap = kDefaultEnumerationCap);

// First admissible candidate the greedy rule would still accept on top of
// the given code, or nullopt if the code is maximal for these parameters.
std::optional<Word> find_extension(const Code& code, const CqChannel& w,
                                   const InputDistribution& p, double lambda, double tau,
                                   const std::function<bool(const Word&)>& admissible = {},
                                   int dense_cap = kDefaultDenseCap,
                                   std::int64_t enumeration_cap = kDefaultEnumerationCap);

// Replaces every decoder element by the projector onto its support.
// Requires a code built with GreedyStyle::projector_history (otherwise the
// supports can overlap and the POVM constraint fails). Support rank uses a
// fixed eigenvalue cut of 1e-12; an eigenvalue inside [1e-13, 1e-12) is too
// close to the cut to classify and raises SolverError.
Code vn_decoder_variant(const Code& code);

// Evaluated greedy size guarantee, in bits:
//   n I(P;W) - [K d delta0 + K d sqrt(a) delta + K a candidate_delta log2 d] sqrt(n)
//     + log2(eta tau / 2 - d / delta0^2)
// with the deltas derived from (lambda, tau, a, d). Negative at desk scale;
// callers treat a non-positive value as vacuous.
double theorem2_size_bound(const InputDistribution& p, const CqChannel& w, int n, double lambda,
                           double tau);

// Strong-converse ceiling for constant-composition codes, in bits:
//   log2(4 / (1 - lambda)) + n I(P;W) + 2 K d sqrt(a) delta sqrt(n),
// delta = sqrt(32 a d) / (1 - lambda).
double strong_converse_cc_bound(const InputDistribution& p, const CqChannel& w, int n,
                                double lambda);

// Strong-converse ceiling for arbitrary codes, in bits: the constant
// composition ceiling with I(P;W) replaced by capacity + gap_bound, plus
// a log2(n + 1) for the number of compositions.
double strong_converse_full_bound(const CqChannel& w, int n, double lambda,
                                  const CapacityResult& cap);

// Size-versus-ceiling comparison for one code.
struct ConverseReport {
    int n = 0;
    double lambda = 0.0;
    std::int64_t size = 0;
    bool constant_composition = false;
    InputDistribution composition = InputDistribution::uniform(1);
    double log2_size = 0.0; // meaningful only when size > 0
    double bound_log2 = 0.0;
    bool pass = true;
};

// Requires every codeword to share one composition; compares log2 |M|
// against the constant-composition ceiling for that composition.
ConverseReport constant_composition_converse_report(const Code& code, const CqChannel& w,
                                                    double lambda);

// Compares log2 |M| against the composition-free ceiling.
ConverseReport full_converse_report(const Code& code, const CqChannel& w, double lambda,
                                    const CapacityResult& cap);

// Splits a code into its constant-composition subcodes, ordered by first
// appearance of each composition in message order.
std::vector<Code> split_by_composition(const Code& code);

// Largest constant-composition subcode; earliest composition wins ties.
Code largest_constant_composition_subcode(const Code& code);

// Conjugates every decoder element by the average-state typical projector at
// delta = sqrt(32 a d) / (1 - lambda) (width delta sqrt(a) on the product
// state) and checks, for a constant-composition (n, lambda)-code:
//   each Tr(W_{f(m)} D'_m) >= (1 - lambda) / 2,
//   each Tr D'_m >= ((1 - lambda) / 4) 2^{n H(W|P) - K d sqrt(a) delta sqrt(n)},
//   sum_m Tr D'_m <= Tr Pi.
struct ModifiedDecoderReport {
    int n = 0;
    double lambda = 0.0;
    std::int64_t size = 0;
    std::int64_t projector_trace = 0;
    std::vector<BoundCheck> checks;
    bool all_pass() const;
};

ModifiedDecoderReport modified_decoder_check(const Code& code, const CqChannel& w, double lambda,
                                             int dense_cap = kDefaultDenseCap,
                                             std::int64_t enumeration_cap = kDefaultEnumerationCap);

// Transition matrix p(y|x) = Tr(W_x E_y) of the classical channel induced by
// measuring the channel outputs with the POVM. The POVM elements must be PSD
// and sum to the identity, both within 1e-9.
Eigen::MatrixXd induced_classical_channel(const CqChannel& w, const std::vector<Matrix>& povm);

// Classical mutual information through any measurement is at most the
// quantum mutual information of the ensemble.
struct HolevoReport {
    double classical_bits = 0.0;
    double quantum_bits = 0.0;
    BoundCheck check;
    bool all_pass() const { return check.pass; }
};

HolevoReport holevo_bound_check(const CqChannel& w, const InputDistribution& p,
                                const std::vector<Matrix>& povm);

} // namespace cqcap
