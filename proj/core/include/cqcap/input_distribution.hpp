#pragma once

#include <vector>

#include "cqcap/errors.hpp"

namespace cqcap {

// Probability distribution on a finite input alphabet: entries >= 0, sum 1
// within 1e-10.
class InputDistribution {
public:
    explicit InputDistribution(std::vector<double> probabilities);

    int size() const { return static_cast<int>(p_.size()); }
    double operator()(int x) const { return p_[static_cast<std::size_t>(x)]; }
    const std::vector<double>& probabilities() const { return p_; }

    static InputDistribution uniform(int a);

private:
    std::vector<double> p_;
};

} // namespace cqcap
