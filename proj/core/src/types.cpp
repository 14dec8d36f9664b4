#include "cqcap/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace cqcap {

InputDistribution::InputDistribution(std::vector<double> probabilities) : p_(std::move(probabilities)) {
    if (p_.empty()) throw ValidationError("input distribution: empty");
    double sum = 0.0;
    for (double v : p_) {
        if (v < 0.0) throw ValidationError("input distribution: negative entry");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-10) {
        throw ValidationError("input distribution: entries sum to " + std::to_string(sum));
    }
}

InputDistribution InputDistribution::uniform(int a) {
    return InputDistribution(std::vector<double>(static_cast<std::size_t>(a), 1.0 / a));
}

InputDistribution TypeDistribution::as_distribution() const {
    std::vector<double> p(counts.size());
    for (std::size_t x = 0; x < counts.size(); ++x) {
        p[x] = static_cast<double>(counts[x]) / n;
    }
    return InputDistribution(std::move(p));
}

double shannon_entropy(const std::vector<double>& p) {
    double h = 0.0;
    for (double v : p) {
        if (v > 0.0) h -= v * std::log2(v);
    }
    return std::max(h, 0.0);
}

double shannon_entropy(const InputDistribution& p) { return shannon_entropy(p.probabilities()); }

TypeDistribution type_of(const Word& word, int alphabet_size) {
    TypeDistribution type;
    type.counts.assign(static_cast<std::size_t>(alphabet_size), 0);
    type.n = static_cast<int>(word.size());
    for (int letter : word) {
        if (letter < 0 || letter >= alphabet_size) {
            throw ValidationError("word: letter index " + std::to_string(letter) +
                                  " outside alphabet of size " + std::to_string(alphabet_size));
        }
        ++type.counts[static_cast<std::size_t>(letter)];
    }
    return type;
}

std::int64_t count_types(int n, int alphabet_size) {
    std::int64_t count = 0;
    for_each_count_vector(n, alphabet_size,
                          [&count](const std::vector<std::int64_t>&) { ++count; });
    return count;
}

bool is_count_vector_typical(const std::vector<std::int64_t>& counts, const TypicalSetSpec& spec) {
    const double root_n = std::sqrt(static_cast<double>(spec.n));
    for (int x = 0; x < spec.p.size(); ++x) {
        const double px = spec.p(x);
        const double dev = std::abs(static_cast<double>(counts[static_cast<std::size_t>(x)]) -
                                    spec.n * px);
        if (dev > spec.delta * root_n * std::sqrt(px * (1.0 - px))) return false;
    }
    return true;
}

bool is_variance_typical(const Word& word, const TypicalSetSpec& spec) {
    if (static_cast<int>(word.size()) != spec.n) {
        throw ValidationError("variance typicality: word length does not match the set parameters");
    }
    return is_count_vector_typical(type_of(word, spec.p.size()).counts, spec);
}

std::vector<Word> enumerate_typical_set(const TypicalSetSpec& spec, std::int64_t cap) {
    const int a = spec.p.size();
    const int n = spec.n;
    double space = std::pow(static_cast<double>(a), n);
    if (space > static_cast<double>(cap)) {
        throw CapExceededError("typical set enumeration: a^n = " + std::to_string(space) +
                               " exceeds cap " + std::to_string(cap));
    }
    std::vector<Word> members;
    Word word(static_cast<std::size_t>(n), 0);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(a), 0);
    counts[0] = n;
    for (;;) {
        if (is_count_vector_typical(counts, spec)) members.push_back(word);
        // lexicographic odometer
        int pos = n - 1;
        while (pos >= 0 && word[static_cast<std::size_t>(pos)] == a - 1) {
            --counts[static_cast<std::size_t>(a - 1)];
            word[static_cast<std::size_t>(pos)] = 0;
            ++counts[0];
            --pos;
        }
        if (pos < 0) break;
        --counts[static_cast<std::size_t>(word[static_cast<std::size_t>(pos)])];
        ++word[static_cast<std::size_t>(pos)];
        ++counts[static_cast<std::size_t>(word[static_cast<std::size_t>(pos)])];
    }
    return members;
}

void for_each_count_vector(int n, int alphabet_size,
                           const std::function<void(const std::vector<std::int64_t>&)>& visit) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(alphabet_size), 0);
    const auto recurse = [&](auto&& self, int x, std::int64_t remaining) -> void {
        if (x == alphabet_size - 1) {
            counts[static_cast<std::size_t>(x)] = remaining;
            visit(counts);
            return;
        }
        for (std::int64_t c = 0; c <= remaining; ++c) {
            counts[static_cast<std::size_t>(x)] = c;
            self(self, x + 1, remaining - c);
        }
    };
    recurse(recurse, 0, n);
}

double log2_multinomial(int n, const std::vector<std::int64_t>& counts) {
    double log_nat = std::lgamma(static_cast<double>(n) + 1.0);
    for (std::int64_t c : counts) log_nat -= std::lgamma(static_cast<double>(c) + 1.0);
    return log_nat / std::numbers::ln2;
}

namespace {

// log2 of prod_x P(x)^{c_x}; -inf if some c_x > 0 where P(x) = 0.
double log2_word_probability(const std::vector<std::int64_t>& counts, const InputDistribution& p) {
    double log_p = 0.0;
    for (int x = 0; x < p.size(); ++x) {
        const std::int64_t c = counts[static_cast<std::size_t>(x)];
        if (c == 0) continue;
        if (p(x) <= 0.0) return -std::numeric_limits<double>::infinity();
        log_p += static_cast<double>(c) * std::log2(p(x));
    }
    return log_p;
}

} // namespace

double typical_set_probability(const TypicalSetSpec& spec) {
    double total = 0.0;
    for_each_count_vector(spec.n, spec.p.size(), [&](const std::vector<std::int64_t>& counts) {
        if (!is_count_vector_typical(counts, spec)) return;
        const double log_p = log2_word_probability(counts, spec.p);
        if (std::isinf(log_p)) return;
        total += std::exp2(log2_multinomial(spec.n, counts) + log_p);
    });
    return total;
}

double typical_set_probability_by_enumeration(const TypicalSetSpec& spec, std::int64_t cap) {
    double total = 0.0;
    for (const Word& word : enumerate_typical_set(spec, cap)) {
        double log_p = 0.0;
        bool zero = false;
        for (int letter : word) {
            if (spec.p(letter) <= 0.0) {
                zero = true;
                break;
            }
            log_p += std::log2(spec.p(letter));
        }
        if (!zero) total += std::exp2(log_p);
    }
    return total;
}

double typical_set_cardinality(const TypicalSetSpec& spec) {
    double total = 0.0;
    for_each_count_vector(spec.n, spec.p.size(), [&](const std::vector<std::int64_t>& counts) {
        if (!is_count_vector_typical(counts, spec)) return;
        total += std::exp2(log2_multinomial(spec.n, counts));
    });
    return total;
}

bool TypicalSetReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const BoundCheck& c) { return c.pass; });
}

TypicalSetReport typical_set_bounds_check(const TypicalSetSpec& spec) {
    const int a = spec.p.size();
    const double root_n = std::sqrt(static_cast<double>(spec.n));
    const double band = kTypicalityK * a * spec.delta * root_n;

    TypicalSetReport report;
    report.entropy_bits = shannon_entropy(spec.p);
    report.set_probability = typical_set_probability(spec);
    report.cardinality = typical_set_cardinality(spec);
    const double nh = spec.n * report.entropy_bits;

    // worst per-word deviation of -log2 P^n(x^n) from nH(P), over member types
    double worst_dev = 0.0;
    std::vector<std::int64_t> worst_counts;
    for_each_count_vector(spec.n, a, [&](const std::vector<std::int64_t>& counts) {
        if (!is_count_vector_typical(counts, spec)) return;
        const double log_p = log2_word_probability(counts, spec.p);
        if (std::isinf(log_p)) return; // zero-probability member cannot occur
        const double dev = std::abs(-log_p - nh);
        if (dev > worst_dev) {
            worst_dev = dev;
            worst_counts = counts;
        }
    });

    const double delta_sq = spec.delta * spec.delta;
    const double prob_floor = 1.0 - a / delta_sq;

    BoundCheck prob;
    prob.name = "set_probability_floor";
    prob.bound = prob_floor;
    prob.achieved = report.set_probability;
    prob.slack = prob.achieved - prob.bound;
    prob.vacuous = prob_floor <= 0.0;
    prob.pass = prob.slack >= -1e-12;
    report.checks.push_back(prob);

    BoundCheck word_band;
    word_band.name = "per_word_logprob_band";
    word_band.bound = band;
    word_band.achieved = worst_dev;
    word_band.slack = band - worst_dev;
    word_band.pass = word_band.slack >= -1e-9;
    if (!word_band.pass && !worst_counts.empty()) {
        std::ostringstream os;
        os << "count vector";
        for (std::int64_t c : worst_counts) os << ' ' << c;
        word_band.witness = os.str();
    }
    report.checks.push_back(word_band);

    BoundCheck card_upper;
    card_upper.name = "cardinality_upper";
    card_upper.bound = std::exp2(nh + band);
    card_upper.achieved = report.cardinality;
    card_upper.slack = card_upper.bound - card_upper.achieved;
    card_upper.pass = card_upper.slack >= -1e-6;
    report.checks.push_back(card_upper);

    BoundCheck card_lower;
    card_lower.name = "cardinality_lower";
    card_lower.bound = prob_floor * std::exp2(nh - band);
    card_lower.achieved = report.cardinality;
    card_lower.slack = card_lower.achieved - card_lower.bound;
    card_lower.vacuous = prob_floor <= 0.0;
    card_lower.pass = card_lower.slack >= -1e-6;
    report.checks.push_back(card_lower);

    return report;
}

BoundCheck floor_check(std::string name, double achieved, double bound, double tol,
                       bool vacuous) {
    BoundCheck c;
    c.name = std::move(name);
    c.bound = bound;
    c.achieved = achieved;
    c.slack = achieved - bound;
    c.vacuous = vacuous;
    c.pass = vacuous || c.slack >= -tol * std::max(1.0, std::abs(bound));
    return c;
}

BoundCheck ceiling_check(std::string name, double achieved, double bound, double tol,
                         bool vacuous) {
    BoundCheck c;
    c.name = std::move(name);
    c.bound = bound;
    c.achieved = achieved;
    c.slack = bound - achieved;
    c.vacuous = vacuous;
    c.pass = vacuous || c.slack >= -tol * std::max(1.0, std::abs(bound));
    return c;
}

std::string word_to_string(const Word& word) {
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0) os << ',';
        os << word[i];
    }
    return os.str();
}

} // namespace cqcap
