#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cqcap/channel.hpp"
#include "cqcap/operators.hpp"
#include "cqcap/types.hpp"

namespace cqcap {

// One fixed spectral decomposition per tensor slot.
struct ProductEigenbasis {
    std::vector<std::shared_ptr<const SpectralDecomposition>> factors;

    int slots() const { return static_cast<int>(factors.size()); }
    const SpectralDecomposition& factor(int i) const {
        return *factors.at(static_cast<std::size_t>(i));
    }
    // Product of the slot dimensions; throws CapExceededError past the cap.
    std::int64_t dense_dim(std::int64_t cap) const;
};

// A projector onto a set of product eigenvectors, stored as the member
// eigenindex sequences plus the per-slot bases. Densification is explicit
// and capped; Tr equals the member count exactly.
class TypicalProjector {
  public:
    TypicalProjector(ProductEigenbasis basis, std::vector<Word> sequences);

    const ProductEigenbasis& basis() const { return basis_; }
    const std::vector<Word>& sequences() const { return sequences_; }
    std::int64_t trace() const { return static_cast<std::int64_t>(sequences_.size()); }
    bool contains(const Word& j) const;

    // The product basis vector for an eigenindex sequence.
    Vector basis_column(const Word& j) const;
    Matrix densify(int dense_cap = kDefaultDenseCap) const;

  private:
    ProductEigenbasis basis_;
    std::vector<Word> sequences_; // sorted lexicographically
};

// Projector onto the variance-typical eigenindex sequences of the n-fold
// product of a state, in its fixed eigenbasis.
TypicalProjector typical_projector(std::shared_ptr<const SpectralDecomposition> dec, int n,
                                   double delta,
                                   std::int64_t enumeration_cap = kDefaultEnumerationCap);
TypicalProjector typical_projector(const DensityOperator& rho, int n, double delta,
                                   std::int64_t enumeration_cap = kDefaultEnumerationCap);

// Tr(rho^{tensor n} Pi) as the exact sum of eigenvalue products over the
// member sequences; no densification. Throws on a basis mismatch.
double overlap_with_tensor_power(const TypicalProjector& pi, const DensityOperator& rho);

struct ProjectorReport {
    double overlap = 0.0;     // Tr(state Pi)
    std::int64_t trace = 0;   // member count
    double entropy_bits = 0.0;
    double band_bits = 0.0;   // allowed deviation of -log2(member product)
    std::vector<BoundCheck> checks;
    bool all_pass() const;
};

// Bounds for the typical projector of rho at block length n: the overlap
// floor 1 - d/delta^2, the per-member eigenvalue-product band
// exp2(-n H(rho) -+ K d delta sqrt(n)), both trace bounds, and the shadow
// floor with Pi itself as the shadow. Trace lower bounds use the
// minus-sign exponent.
ProjectorReport typical_projector_bounds_check(const DensityOperator& rho, int n, double delta,
                                               std::int64_t enumeration_cap =
                                                   kDefaultEnumerationCap);

// An operator 0 <= B <= I together with its claimed overlap eta; the claim
// Tr(rho B) >= eta is checked at construction against the supplied state.
class ShadowWitness {
  public:
    ShadowWitness(HermitianOperator b, double eta, const Matrix& rho);

    const HermitianOperator& op() const { return b_; }
    double eta() const { return eta_; }

  private:
    HermitianOperator b_;
    double eta_;
};

struct ShadowBoundReport {
    std::vector<BoundCheck> preconditions;
    std::vector<BoundCheck> conclusions;
    bool preconditions_hold() const;
    bool all_pass() const;
};

// Dense verifier for the trace bounds implied by a spectral pinch: when
// lambda_op and rho commute, Tr(rho lambda_op) >= 1 - lambda, and
// mu1 lambda_op <= sqrt(lambda_op) rho sqrt(lambda_op) <= mu2 lambda_op,
// then (1 - lambda) / mu2 <= Tr(lambda_op) <= 1 / mu1 and every shadow B
// with Tr(rho B) >= eta has Tr(B) >= (eta - lambda) / mu2.
ShadowBoundReport shadow_bound(const Matrix& lambda_op, const Matrix& rho, double lambda,
                               double mu1, double mu2, const ShadowWitness& b);

// Conditional typical projector of a channel given a word: slot i carries
// the fixed eigenbasis of the letter state at position i, and a sequence is
// a member iff every per-letter block of it is variance-typical for that
// letter's eigenvalue list.
TypicalProjector conditional_typical_projector(const CqChannel& w, const Word& word, double delta,
                                               std::int64_t enumeration_cap =
                                                   kDefaultEnumerationCap);

// Bounds for the conditional typical projector: overlap floor
// 1 - a d/delta^2, member-product band exp2(-n H(W|P) -+ K d sqrt(a) delta
// sqrt(n)) with P the exact type of the word, trace bounds, shadow floor.
// Computed per letter and combined, so no full member enumeration is
// needed.
ProjectorReport conditional_projector_bounds_check(const CqChannel& w, const Word& word,
                                                   double delta,
                                                   std::int64_t enumeration_cap =
                                                       kDefaultEnumerationCap);

// Erases off-diagonal blocks of sigma in the given eigenbasis: the sum of
// p_j sigma p_j over the rank-1 eigenprojectors. Trace and positivity are
// preserved.
DensityOperator pinch(const SpectralDecomposition& basis, const DensityOperator& sigma);

struct WeakLawReport {
    double overlap = 0.0;         // Tr(W_{x^n} Pi) for Pi of PW at delta sqrt(a)
    double pinched_overlap = 0.0; // the same overlap restricted to the pinched member set
    std::int64_t trace = 0;
    std::vector<BoundCheck> checks;
    bool all_pass() const;
};

// For a word of exact type P, checks Tr(W_{x^n} Pi) >= 1 - a d/delta^2
// where Pi is the typical projector of PW with constant delta sqrt(a).
// Also verifies the member-set inclusion of the pinched channel's
// conditional projector, the classical overlap floor for the pinched
// channel, and the agreement of the dense overlap with its product form.
WeakLawReport weak_law_check(const CqChannel& w, const InputDistribution& p, const Word& word,
                             double delta, int dense_cap = kDefaultDenseCap,
                             std::int64_t enumeration_cap = kDefaultEnumerationCap);

} // namespace cqcap
