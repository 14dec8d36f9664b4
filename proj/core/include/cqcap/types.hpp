#pragma once

#include <cstdint>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "cqcap/input_distribution.hpp"

namespace cqcap {

// A length-n sequence of alphabet indices.
using Word = std::vector<int>;

// Constant in the variance-typicality exponent bounds: 2 log2(e) / e.
inline constexpr double kTypicalityK = 2.0 * std::numbers::log2e / std::numbers::e;

inline constexpr std::int64_t kDefaultEnumerationCap = 10'000'000;

// Empirical letter counts of a word.
struct TypeDistribution {
    std::vector<std::int64_t> counts;
    int n = 0;

    InputDistribution as_distribution() const;
};

// Parameters of a variance-typical set: letter counts may deviate from n*P(x)
// by at most delta * sqrt(n) * sqrt(P(x) (1 - P(x))).
struct TypicalSetSpec {
    InputDistribution p;
    int n = 0;
    double delta = 0.0;
};

// Shannon entropy in bits, with 0 log 0 := 0.
double shannon_entropy(const std::vector<double>& p);
double shannon_entropy(const InputDistribution& p);

TypeDistribution type_of(const Word& word, int alphabet_size);

// Number of distinct types of length-n words over a letters (exact).
std::int64_t count_types(int n, int alphabet_size);

// Typicality predicate on a count vector; a word is variance-typical iff its
// type is.
bool is_count_vector_typical(const std::vector<std::int64_t>& counts, const TypicalSetSpec& spec);
bool is_variance_typical(const Word& word, const TypicalSetSpec& spec);

// All members of the variance-typical set in lexicographic order. Throws
// CapExceededError when a^n exceeds the enumeration cap.
std::vector<Word> enumerate_typical_set(const TypicalSetSpec& spec,
                                        std::int64_t cap = kDefaultEnumerationCap);

// Exact probability of the typical set under the n-fold product of P,
// computed by summing multinomial terms over admissible count vectors.
double typical_set_probability(const TypicalSetSpec& spec);

// Fallback oracle: sum per-word probabilities over the enumerated set.
double typical_set_probability_by_enumeration(const TypicalSetSpec& spec,
                                              std::int64_t cap = kDefaultEnumerationCap);

// Exact cardinality of the typical set via multinomial counting.
double typical_set_cardinality(const TypicalSetSpec& spec);

// Visits every count vector (c_0..c_{a-1}) with nonnegative entries summing
// to n, in lexicographic order.
void for_each_count_vector(int n, int alphabet_size,
                           const std::function<void(const std::vector<std::int64_t>&)>& visit);

// log2 of the multinomial coefficient n! / prod(c_x!).
double log2_multinomial(int n, const std::vector<std::int64_t>& counts);

// One verified inequality: pass iff slack >= -tolerance, vacuous when the
// bound imposes nothing (e.g. a nonpositive lower bound on a cardinality).
struct BoundCheck {
    std::string name;
    double bound = 0.0;
    double achieved = 0.0;
    double slack = 0.0; // >= 0 means the inequality holds
    bool pass = true;
    bool vacuous = false;
    std::string witness; // offending word or sequence, when applicable
};

// achieved >= bound, resp. achieved <= bound, within a relative tolerance
// (absolute once |bound| <= 1). Vacuous checks pass unconditionally.
BoundCheck floor_check(std::string name, double achieved, double bound, double tol,
                       bool vacuous = false);
BoundCheck ceiling_check(std::string name, double achieved, double bound, double tol,
                         bool vacuous = false);

// Verification of the typical-set bounds: set probability >= 1 - a/delta^2,
// per-word |-log2 P^n(x^n) - n H(P)| <= K a delta sqrt(n), and the two
// cardinality bounds. Lower bounds use the minus-sign exponent.
struct TypicalSetReport {
    double set_probability = 0.0;
    double cardinality = 0.0;
    double entropy_bits = 0.0;
    std::vector<BoundCheck> checks;

    bool all_pass() const;
};

TypicalSetReport typical_set_bounds_check(const TypicalSetSpec& spec);

std::string word_to_string(const Word& word);

} // namespace cqcap
