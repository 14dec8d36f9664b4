#pragma once

#include <string>
#include <vector>

#include "cqcap/input_distribution.hpp"
#include "cqcap/operators.hpp"
#include "cqcap/types.hpp"

namespace cqcap {

// A classical-quantum channel: a finite input alphabet mapped to density
// operators on a common d-dimensional space.
class CqChannel {
  public:
    // Labels may be empty, in which case "0", "1", ... are assigned.
    // All states must share one dimension; labels must be distinct.
    explicit CqChannel(std::vector<DensityOperator> states,
                       std::vector<std::string> labels = {});

    int alphabet_size() const { return static_cast<int>(states_.size()); }
    int dim() const { return static_cast<int>(states_.front().mat().rows()); }

    const DensityOperator& state(int x) const { return states_.at(static_cast<std::size_t>(x)); }
    const std::string& label(int x) const { return labels_.at(static_cast<std::size_t>(x)); }
    const std::vector<DensityOperator>& states() const { return states_; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Index of a label; throws ValidationError if absent.
    int index_of(const std::string& label) const;

  private:
    std::vector<DensityOperator> states_;
    std::vector<std::string> labels_;
};

struct CapacityResult {
    double capacity = 0.0; // bits
    InputDistribution maximizer = InputDistribution::uniform(1);
    int iterations = 0;
    double gap_bound = 0.0; // certified distance to the optimum, bits
};

// PW = sum_x P(x) W_x.
DensityOperator average_state(const CqChannel& w, const InputDistribution& p);

// sum_x P(x) H(W_x), bits.
double conditional_entropy(const CqChannel& w, const InputDistribution& p);

// H(PW) - H(W|P), bits.
double mutual_info(const CqChannel& w, const InputDistribution& p);

// Tr rho (log2 rho - log2 sigma), bits; +infinity when rho has mass
// outside the support of sigma. sigma may be subnormalized.
double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma);

// Maximize I(P;W) over input distributions by multiplicative updates
// P'(x) proportional to P(x) 2^{D(W_x || PW)}, from the uniform start.
// Stops once max_x D(W_x || PW) - I(P;W) <= tol; that gap bounds the
// distance to the optimum. Throws OptimizerError past max_iterations.
CapacityResult capacity(const CqChannel& w, double tol, int max_iterations = 100000);

// Brute-force maximum of I(P;W) over a simplex grid; independent of the
// iterative optimizer. Refuses alphabets larger than 3.
double capacity_grid_oracle(const CqChannel& w, double step);

// Dense matrix of the tensor-power state W_{x^n} = W_{x_1} x ... x W_{x_n}.
Matrix word_state(const CqChannel& w, const Word& word, int dense_cap = kDefaultDenseCap);

} // namespace cqcap
