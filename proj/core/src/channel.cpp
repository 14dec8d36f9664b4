#include "cqcap/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "cqcap/errors.hpp"

namespace cqcap {

namespace {

// sigma eigenvalues at or below this are treated as kernel directions.
constexpr double kSupportEigenvalueCutoff = 1e-12;
// rho mass on the kernel of sigma above this triggers the +infinity sentinel.
constexpr double kSupportMassTol = 1e-9;

} // namespace

CqChannel::CqChannel(std::vector<DensityOperator> states, std::vector<std::string> labels)
    : states_(std::move(states)), labels_(std::move(labels)) {
    if (states_.empty()) throw ValidationError("channel needs at least one input state");
    const auto d = states_.front().mat().rows();
    for (const auto& s : states_) {
        if (s.mat().rows() != d)
            throw ValidationError("channel states must share one dimension");
    }
    if (labels_.empty()) {
        labels_.reserve(states_.size());
        for (std::size_t x = 0; x < states_.size(); ++x) labels_.push_back(std::to_string(x));
    }
    if (labels_.size() != states_.size())
        throw ValidationError("channel label count must match state count");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw ValidationError("channel labels must be distinct");
}

int CqChannel::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw ValidationError("unknown channel input label: " + label);
    return static_cast<int>(it - labels_.begin());
}

DensityOperator average_state(const CqChannel& w, const InputDistribution& p) {
    if (p.size() != w.alphabet_size())
        throw ValidationError("distribution size must match channel alphabet");
    Matrix avg = Matrix::Zero(w.dim(), w.dim());
    for (int x = 0; x < w.alphabet_size(); ++x) avg += p(x) * w.state(x).mat();
    return DensityOperator(avg);
}

double conditional_entropy(const CqChannel& w, const InputDistribution& p) {
    if (p.size() != w.alphabet_size())
        throw ValidationError("distribution size must match channel alphabet");
    double h = 0.0;
    for (int x = 0; x < w.alphabet_size(); ++x) {
        if (p(x) > 0.0) h += p(x) * von_neumann_entropy(w.state(x));
    }
    return h;
}

double mutual_info(const CqChannel& w, const InputDistribution& p) {
    return von_neumann_entropy(average_state(w, p)) - conditional_entropy(w, p);
}

double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma) {
    const auto& rd = rho.decomposition();
    const auto& sd = sigma.decomposition();
    double tr_rho_log_rho = 0.0;
    for (double v : rd.eigenvalue_list()) {
        if (v > 0.0) tr_rho_log_rho += v * std::log2(v);
    }
    double tr_rho_log_sigma = 0.0;
    for (int j = 0; j < sd.eigenvectors().cols(); ++j) {
        const Vector v = sd.eigenvectors().col(j);
        const double mass = std::real(v.dot(rho.mat() * v));
        const double mu = sd.eigenvalue_list()[static_cast<std::size_t>(j)];
        if (mu > kSupportEigenvalueCutoff) {
            tr_rho_log_sigma += mass * std::log2(mu);
        } else if (mass > kSupportMassTol) {
            return std::numeric_limits<double>::infinity();
        }
    }
    return std::max(tr_rho_log_rho - tr_rho_log_sigma, 0.0);
}

namespace {

struct GapReport {
    double mutual = 0.0;
    double gap = 0.0;
    std::vector<double> divergences;
};

GapReport divergence_gap(const CqChannel& w, const InputDistribution& p) {
    GapReport r;
    const DensityOperator avg = average_state(w, p);
    r.divergences.resize(static_cast<std::size_t>(w.alphabet_size()));
    double max_div = 0.0;
    for (int x = 0; x < w.alphabet_size(); ++x) {
        const double d = relative_entropy(w.state(x), avg);
        r.divergences[static_cast<std::size_t>(x)] = d;
        max_div = std::max(max_div, d);
        if (p(x) > 0.0) r.mutual += p(x) * d;
    }
    r.gap = std::max(max_div - r.mutual, 0.0);
    return r;
}

} // namespace

CapacityResult capacity(const CqChannel& w, double tol, int max_iterations) {
    if (!(tol > 0.0)) throw ValidationError("capacity tolerance must be positive");
    const int a = w.alphabet_size();
    std::vector<double> p(static_cast<std::size_t>(a), 1.0 / a);

    double best_value = -1.0;
    double best_gap = std::numeric_limits<double>::infinity();
    for (int it = 1; it <= max_iterations; ++it) {
        const InputDistribution dist(p);
        const GapReport r = divergence_gap(w, dist);
        if (r.mutual > best_value) {
            best_value = r.mutual;
            best_gap = r.gap;
        }
        if (r.gap <= tol) {
            CapacityResult out;
            out.capacity = r.mutual;
            out.maximizer = dist;
            out.iterations = it;
            out.gap_bound = r.gap;
            return out;
        }
        // Multiplicative update, shifted by the largest exponent so the
        // unnormalized weights stay in range.
        double max_div = *std::max_element(r.divergences.begin(), r.divergences.end());
        double total = 0.0;
        for (int x = 0; x < a; ++x) {
            auto ux = static_cast<std::size_t>(x);
            p[ux] *= std::exp2(r.divergences[ux] - max_div);
            total += p[ux];
        }
        for (double& v : p) v /= total;
    }
    throw OptimizerError("capacity iteration cap exceeded", best_value, best_gap);
}

double capacity_grid_oracle(const CqChannel& w, double step) {
    if (!(step > 0.0)) throw ValidationError("grid step must be positive");
    const int a = w.alphabet_size();
    if (a > 3) throw ValidationError("grid oracle supports alphabets of size at most 3");
    if (a == 1) return mutual_info(w, InputDistribution({1.0}));

    const int cells = static_cast<int>(std::llround(1.0 / step));
    double best = 0.0;
    if (a == 2) {
        for (int i = 0; i <= cells; ++i) {
            const double p0 = static_cast<double>(i) / cells;
            best = std::max(best, mutual_info(w, InputDistribution({p0, 1.0 - p0})));
        }
        return best;
    }
    for (int i = 0; i <= cells; ++i) {
        for (int j = 0; j <= cells - i; ++j) {
            const double p0 = static_cast<double>(i) / cells;
            const double p1 = static_cast<double>(j) / cells;
            best = std::max(best, mutual_info(w, InputDistribution({p0, p1, 1.0 - p0 - p1})));
        }
    }
    return best;
}

Matrix word_state(const CqChannel& w, const Word& word, int dense_cap) {
    std::vector<const Matrix*> factors;
    factors.reserve(word.size());
    for (int x : word) factors.push_back(&w.state(x).mat());
    return kron_all(factors, dense_cap);
}

} // namespace cqcap
