#include "cqcap/suites.hpp"

#include <cmath>
#include <sstream>

#include "cqcap/coding.hpp"
#include "cqcap/distance.hpp"
#include "cqcap/errors.hpp"
#include "cqcap/projectors.hpp"
#include "cqcap/random.hpp"
#include "cqcap/report.hpp"

namespace cqcap {

namespace {

constexpr double kOrderTol = 1e-9;

void emit(CsvWriter& csv, const std::string& suite, int trial, const std::string& params,
          const BoundCheck& c, int& violations) {
    if (!c.pass) {
        ++violations;
    }
    csv.row({suite, std::to_string(trial), params, c.name, csv_double(c.bound),
             csv_double(c.achieved), csv_double(c.slack), c.pass ? "1" : "0", c.witness});
}

void emit_all(CsvWriter& csv, const std::string& suite, int trial, const std::string& params,
              const std::vector<BoundCheck>& checks, int& violations) {
    for (const BoundCheck& c : checks) {
        emit(csv, suite, trial, params, c, violations);
    }
}

double pick(RandomStream& rng, std::initializer_list<double> values) {
    const int k = rng.uniform_int(static_cast<int>(values.size()));
    return *(values.begin() + k);
}

} // namespace

CqChannel orthogonal_pure_channel() {
    Matrix zero = Matrix::Zero(2, 2);
    zero(0, 0) = 1.0;
    Matrix one = Matrix::Zero(2, 2);
    one(1, 1) = 1.0;
    return CqChannel({DensityOperator(zero), DensityOperator(one)}, {"0", "1"});
}

CqChannel zero_plus_channel() {
    Matrix zero = Matrix::Zero(2, 2);
    zero(0, 0) = 1.0;
    Matrix plus(2, 2);
    plus << 0.5, 0.5, 0.5, 0.5;
    return CqChannel({DensityOperator(zero), DensityOperator(plus)}, {"0", "+"});
}

const std::vector<std::string>& suite_csv_columns() {
    static const std::vector<std::string> columns = {
        "suite", "trial", "params", "check", "bound", "achieved", "slack", "pass", "witness"};
    return columns;
}

SuiteOutcome run_types_suite(int trials, std::uint64_t seed, std::ostream& out) {
    CsvWriter csv(out);
    csv.header(suite_csv_columns());
    SuiteOutcome outcome{"types", trials, 0};
    for (int t = 0; t < trials; ++t) {
        RandomStream rng(seed, static_cast<std::uint64_t>(t));
        const int a = 1 + rng.uniform_int(3);
        const int n = 1 + rng.uniform_int(12);
        const double delta = pick(rng, {1.0, 2.0, 4.0});
        const InputDistribution p = rng.distribution(a);
        const TypicalSetReport report = typical_set_bounds_check(TypicalSetSpec{p, n, delta});
        std::ostringstream params;
        params << "a=" << a << ";n=" << n << ";delta=" << delta;
        emit_all(csv, outcome.suite, t, params.str(), report.checks, outcome.violations);
    }
    return outcome;
}

SuiteOutcome run_projector_suite(int trials, std::uint64_t seed, std::ostream& out) {
    CsvWriter csv(out);
    csv.header(suite_csv_columns());
    SuiteOutcome outcome{"projector", trials, 0};
    for (int t = 0; t < trials; ++t) {
        RandomStream rng(seed, static_cast<std::uint64_t>(t));

        const DensityOperator rho = rng.mixed_state(2);
        const int n_state = 1 + rng.uniform_int(8);
        const double delta_state = pick(rng, {1.0, 2.0, 4.0});
        const ProjectorReport state_report =
            typical_projector_bounds_check(rho, n_state, delta_state);
        std::ostringstream state_params;
        state_params << "part=state;d=2;n=" << n_state << ";delta=" << delta_state;
        emit_all(csv, outcome.suite, t, state_params.str(), state_report.checks,
                 outcome.violations);

        const CqChannel w = rng.channel(2, 2);
        const int n_channel = 1 + rng.uniform_int(8);
        const double delta_channel = pick(rng, {1.0, 2.0, 4.0});
        const Word word = rng.word(n_channel, 2);
        const ProjectorReport channel_report =
            conditional_projector_bounds_check(w, word, delta_channel);
        std::ostringstream channel_params;
        channel_params << "part=channel;a=2;d=2;n=" << n_channel << ";delta=" << delta_channel
                       << ";word=" << word_to_string(word);
        emit_all(csv, outcome.suite, t, channel_params.str(), channel_report.checks,
                 outcome.violations);
    }
    return outcome;
}

SuiteOutcome run_shadow_suite(int trials, std::uint64_t seed, std::ostream& out) {
    CsvWriter csv(out);
    csv.header(suite_csv_columns());
    SuiteOutcome outcome{"shadow", trials, 0};
    const int d = 8;
    for (int t = 0; t < trials; ++t) {
        RandomStream rng(seed, static_cast<std::uint64_t>(t));
        const InputDistribution probs = rng.distribution(d);
        Matrix rho = Matrix::Zero(d, d);
        Matrix lam = Matrix::Zero(d, d);
        Matrix shadow = Matrix::Zero(d, d);
        double overlap = 0.0;
        double eta = 0.0;
        double mu1 = 1.0;
        double mu2 = 0.0;
        for (int k = 0; k < d; ++k) {
            rho(k, k) = Complex(probs(k), 0.0);
            const double lk = rng.uniform();
            lam(k, k) = Complex(lk, 0.0);
            const double bk = rng.uniform();
            shadow(k, k) = Complex(bk, 0.0);
            overlap += probs(k) * lk;
            eta += probs(k) * bk;
            if (lk > 1e-12) {
                mu1 = std::min(mu1, probs(k));
                mu2 = std::max(mu2, probs(k));
            }
        }
        const double lambda = 1.0 - overlap;
        const ShadowWitness witness(HermitianOperator(shadow), eta, rho);
        const ShadowBoundReport report = shadow_bound(lam, rho, lambda, mu1, mu2, witness);
        std::ostringstream params;
        params << "d=" << d << ";lambda=" << csv_double(lambda) << ";mu1=" << csv_double(mu1)
               << ";mu2=" << csv_double(mu2) << ";eta=" << csv_double(eta);
        emit_all(csv, outcome.suite, t, params.str(), report.preconditions, outcome.violations);
        emit_all(csv, outcome.suite, t, params.str(), report.conclusions, outcome.violations);
    }
    return outcome;
}

SuiteOutcome run_weaklaw_suite(int trials, std::uint64_t seed, std::ostream& out) {
    CsvWriter csv(out);
    csv.header(suite_csv_columns());
    SuiteOutcome outcome{"weaklaw", trials, 0};
    for (int t = 0; t < trials; ++t) {
        RandomStream rng(seed, static_cast<std::uint64_t>(t));
        const CqChannel w = rng.channel(2, 2);
        const int n = 1 + rng.uniform_int(8);
        const double delta = pick(rng, {2.0, 4.0});
        const Word word = rng.word(n, 2);
        const InputDistribution p = type_of(word, 2).as_distribution();
        const WeakLawReport report = weak_law_check(w, p, word, delta);
        std::ostringstream params;
        params << "a=2;d=2;n=" << n << ";delta=" << delta << ";word=" << word_to_string(word);
        emit_all(csv, outcome.suite, t, params.str(), report.checks, outcome.violations);
    }
    return outcome;
}

SuiteOutcome run_fidelity_suite(int trials, std::uint64_t seed, std::ostream& out) {
    CsvWriter csv(out);
    csv.header(suite_csv_columns());
    SuiteOutcome outcome{"fidelity", trials, 0};
    for (int t = 0; t < trials; ++t) {
        RandomStream rng(seed, static_cast<std::uint64_t>(t));

        const int d_pure = 2 + rng.uniform_int(2);
        const FidelityDistanceReport pure_report =
            pure_fidelity_identity_check(rng.pure_state(d_pure), rng.pure_state(d_pure));
        std::ostringstream pure_params;
        pure_params << "part=pure_pair;d=" << d_pure;
        emit_all(csv, outcome.suite, t, pure_params.str(), pure_report.checks,
                 outcome.violations);

        const int d_mixed = 2 + rng.uniform_int(3);
        const DensityOperator psi = rng.pure_state(d_mixed);
        const DensityOperator sigma = rng.mixed_state(d_mixed);
        const bool subnormalized = rng.uniform_int(2) == 1;
        FidelityDistanceReport mixed_report;
        double scale = 1.0;
        if (subnormalized) {
            scale = 0.5 + 0.5 * rng.uniform();
            mixed_report = fidelity_distance_bounds_check(psi, Matrix(scale * sigma.mat()));
        } else {
            mixed_report = fidelity_distance_bounds_check(psi, sigma);
        }
        std::ostringstream mixed_params;
        mixed_params << "part=pure_mixed;d=" << d_mixed << ";scale=" << csv_double(scale);
        emit_all(csv, outcome.suite, t, mixed_params.str(), mixed_report.checks,
                 outcome.violations);
    }
    return outcome;
}

SuiteOutcome run_gentle_suite(int trials, std::uint64_t seed, std::ostream& out) {
    CsvWriter csv(out);
    csv.header(suite_csv_columns());
    SuiteOutcome outcome{"gentle", trials, 0};
    for (int t = 0; t < trials; ++t) {
        RandomStream rng(seed, static_cast<std::uint64_t>(t));
        const int d = 2 + rng.uniform_int(5);
        const DensityOperator rho = rng.mixed_state(d);
        const HermitianOperator x = rng.contraction(d);
        const BoundCheck check = gentle_measurement_check(rho, x.mat());
        std::ostringstream params;
        params << "d=" << d;
        emit(csv, outcome.suite, t, params.str(), check, outcome.violations);
    }
    return outcome;
}

SuiteOutcome run_holevo_suite(int trials, std::uint64_t seed, std::ostream& out) {
    CsvWriter csv(out);
    csv.header(suite_csv_columns());
    SuiteOutcome outcome{"holevo", trials, 0};
    for (int t = 0; t < trials; ++t) {
        RandomStream rng(seed, static_cast<std::uint64_t>(t));

        const int d = 2 + rng.uniform_int(3);
        const int a = 1 + rng.uniform_int(4);
        const int outcomes = 1 + rng.uniform_int(6);
        const CqChannel w = rng.channel(a, d);
        const InputDistribution p = rng.distribution(a);
        const HolevoReport report = holevo_bound_check(w, p, rng.povm(d, outcomes));
        std::ostringstream params;
        params << "part=random;a=" << a << ";d=" << d << ";outcomes=" << outcomes;
        emit(csv, outcome.suite, t, params.str(), report.check, outcome.violations);

        const int dc = 2 + rng.uniform_int(3);
        const int ac = 1 + rng.uniform_int(4);
        const CqChannel commuting = rng.commuting_channel(ac, dc);
        std::vector<Matrix> basis_povm;
        basis_povm.reserve(static_cast<std::size_t>(dc));
        for (int k = 0; k < dc; ++k) {
            Matrix e = Matrix::Zero(dc, dc);
            e(k, k) = 1.0;
            basis_povm.push_back(std::move(e));
        }
        const HolevoReport eq_report =
            holevo_bound_check(commuting, rng.distribution(ac), basis_povm);
        std::ostringstream eq_params;
        eq_params << "part=commuting;a=" << ac << ";d=" << dc;
        emit(csv, outcome.suite, t, eq_params.str(), eq_report.check, outcome.violations);
        emit(csv, outcome.suite, t, eq_params.str(),
             ceiling_check("holevo_equality",
                           std::abs(eq_report.classical_bits - eq_report.quantum_bits), 0.0,
                           kOrderTol),
             outcome.violations);
    }
    return outcome;
}

SuiteOutcome run_suite(const std::string& name, int trials, std::uint64_t seed,
                       std::ostream& out) {
    if (name == "types") return run_types_suite(trials, seed, out);
    if (name == "projector") return run_projector_suite(trials, seed, out);
    if (name == "shadow") return run_shadow_suite(trials, seed, out);
    if (name == "weaklaw") return run_weaklaw_suite(trials, seed, out);
    if (name == "fidelity") return run_fidelity_suite(trials, seed, out);
    if (name == "gentle") return run_gentle_suite(trials, seed, out);
    if (name == "holevo") return run_holevo_suite(trials, seed, out);
    throw ValidationError("unknown suite " + name);
}

namespace {

void fleet_case(CsvWriter& csv, SuiteOutcome& outcome, int trial, const std::string& name,
                const CqChannel& w, int n, double lambda, int dense_cap) {
    const InputDistribution p = InputDistribution::uniform(w.alphabet_size());
    const double tau = 1.0;
    const Code code = greedy_code_build(w, p, n, lambda, tau, {}, GreedyStyle::sandwich,
                                        dense_cap);
    std::ostringstream base;
    base << "channel=" << name << ";n=" << n << ";lambda=" << lambda
         << ";size=" << code.size();
    const std::string params = base.str();

    emit(csv, outcome.suite, trial, params,
         ceiling_check("error_within_lambda", error_probability(code, w, dense_cap), lambda,
                       kOrderTol),
         outcome.violations);
    emit(csv, outcome.suite, trial, params,
         ceiling_check("povm_within_identity", max_eigenvalue(code.decoder_sum()), 1.0,
                       kOrderTol, code.size() == 0),
         outcome.violations);

    const GreedyParams greedy(lambda, tau, w.alphabet_size(), w.dim());
    double worst_excess = 0.0;
    std::string trace_witness;
    for (std::size_t m = 0; m < code.size(); ++m) {
        const TypicalProjector pi =
            conditional_typical_projector(w, code.codeword(static_cast<int>(m)), greedy.delta());
        const double excess =
            code.element_trace(static_cast<int>(m)) - static_cast<double>(pi.trace());
        if (excess > worst_excess) {
            worst_excess = excess;
            trace_witness = "message " + std::to_string(m);
        }
    }
    BoundCheck trace_check = ceiling_check("element_trace_within_projector", worst_excess, 0.0,
                                           kOrderTol, code.size() == 0);
    trace_check.witness = trace_witness;
    emit(csv, outcome.suite, trial, params, trace_check, outcome.violations);

    const std::optional<Word> extension =
        find_extension(code, w, p, lambda, tau, {}, dense_cap);
    BoundCheck ext_check =
        ceiling_check("non_extendible", extension.has_value() ? 1.0 : 0.0, 0.0, kOrderTol);
    if (extension.has_value()) {
        ext_check.witness = word_to_string(*extension);
    }
    emit(csv, outcome.suite, trial, params, ext_check, outcome.violations);

    const double size_floor = theorem2_size_bound(p, w, n, lambda, tau);
    const double log2_size =
        code.size() > 0 ? std::log2(static_cast<double>(code.size())) : 0.0;
    emit(csv, outcome.suite, trial, params,
         floor_check("size_floor", log2_size, size_floor, kOrderTol,
                     size_floor <= 0.0 || code.size() == 0),
         outcome.violations);

    const CapacityResult cap = capacity(w, 1e-6);
    const ConverseReport full = full_converse_report(code, w, lambda, cap);
    emit(csv, outcome.suite, trial, params,
         ceiling_check("size_within_full_ceiling", full.log2_size, full.bound_log2, kOrderTol,
                       code.size() == 0),
         outcome.violations);

    for (const Code& part : split_by_composition(code)) {
        const TypeDistribution type = type_of(part.codeword(0), w.alphabet_size());
        std::ostringstream comp;
        comp << params << ";composition=";
        for (std::size_t x = 0; x < type.counts.size(); ++x) {
            if (x > 0) comp << "+";
            comp << type.counts[x];
        }
        const std::string part_params = comp.str();
        const ConverseReport cc = constant_composition_converse_report(part, w, lambda);
        emit(csv, outcome.suite, trial, part_params,
             ceiling_check("size_within_cc_ceiling", cc.log2_size, cc.bound_log2, kOrderTol),
             outcome.violations);
        const ModifiedDecoderReport mod = modified_decoder_check(part, w, lambda, dense_cap);
        emit_all(csv, outcome.suite, trial, part_params, mod.checks, outcome.violations);
    }
}

} // namespace

SuiteOutcome run_coding_fleet(int random_channels, std::uint64_t seed, std::ostream& out,
                              int dense_cap) {
    CsvWriter csv(out);
    csv.header(suite_csv_columns());
    SuiteOutcome outcome{"coding", 0, 0};
    std::vector<std::pair<std::string, CqChannel>> channels;
    channels.emplace_back("orthogonal_pure", orthogonal_pure_channel());
    channels.emplace_back("zero_plus", zero_plus_channel());
    for (int k = 0; k < random_channels; ++k) {
        RandomStream rng(seed, static_cast<std::uint64_t>(k));
        channels.emplace_back("random" + std::to_string(k), rng.channel(2, 2));
    }
    int trial = 0;
    for (const auto& [name, w] : channels) {
        for (int n : {4, 6, 8}) {
            for (double lambda : {0.3, 0.5}) {
                fleet_case(csv, outcome, trial, name, w, n, lambda, dense_cap);
                ++trial;
            }
        }
    }
    outcome.trials = trial;
    return outcome;
}

} // namespace cqcap
