#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cqcap/channel.hpp"
#include "cqcap/coding.hpp"
#include "cqcap/errors.hpp"
#include "cqcap/io.hpp"
#include "cqcap/random.hpp"
#include "cqcap/report.hpp"
#include "cqcap/suites.hpp"

namespace {

// Exit codes: 0 pass, 1 property violation, 2 input/validation error,
// 3 optimizer or numerical failure, 4 resource cap exceeded.
constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitOptimizer = 3;
constexpr int kExitCap = 4;

struct RunConfig {
    std::string channel_path;
    std::string code_path;
    std::string out_path;
    std::string suite;
    std::string dist = "capacity";
    int n = 4;
    double lambda = 0.3;
    double tau = 1.0;
    double tol = 1e-6;
    int trials = 100;
    std::uint64_t seed = 0;
    int dense_cap = cqcap::kDefaultDenseCap;
    bool lambda_set = false;
};

// Routes report output to --out when given, stdout otherwise.
class OutputTarget {
  public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) {
                throw cqcap::ValidationError("cannot write " + path);
            }
        }
    }

    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

std::string fixed6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

int cmd_capacity(const RunConfig& cfg) {
    const cqcap::CqChannel w = cqcap::load_channel(cfg.channel_path);
    const cqcap::CapacityResult r = cqcap::capacity(w, cfg.tol);
    OutputTarget target(cfg.out_path);
    std::ostream& out = target.stream();
    out << "key,value\n";
    out << "capacity_bits," << fixed6(r.capacity) << "\n";
    out << "gap_bound," << cqcap::csv_double(r.gap_bound) << "\n";
    out << "iterations," << r.iterations << "\n";
    std::ostringstream maximizer;
    for (int x = 0; x < r.maximizer.size(); ++x) {
        if (x > 0) {
            maximizer << ";";
        }
        maximizer << cqcap::csv_double(r.maximizer(x));
    }
    out << "maximizer," << maximizer.str() << "\n";
    return kExitPass;
}

int cmd_verify(const RunConfig& cfg) {
    OutputTarget target(cfg.out_path);
    const cqcap::SuiteOutcome outcome =
        cqcap::run_suite(cfg.suite, cfg.trials, cfg.seed, target.stream());
    std::cerr << "suite " << outcome.suite << ": " << outcome.trials << " trials, "
              << outcome.violations << " violations\n";
    return outcome.violations == 0 ? kExitPass : kExitViolation;
}

int cmd_code_build(const RunConfig& cfg) {
    const cqcap::CqChannel w = cqcap::load_channel(cfg.channel_path);
    const cqcap::CapacityResult cap = cqcap::capacity(w, cfg.tol);
    const cqcap::InputDistribution p =
        cfg.dist == "uniform" ? cqcap::InputDistribution::uniform(w.alphabet_size())
                              : cap.maximizer;
    const cqcap::Code code = cqcap::greedy_code_build(w, p, cfg.n, cfg.lambda, cfg.tau, {},
                                                      cqcap::GreedyStyle::sandwich,
                                                      cfg.dense_cap);
    if (!cfg.code_path.empty()) {
        cqcap::save_code(code, w, cfg.channel_path, cfg.code_path);
    }
    const double log2_size =
        code.size() > 0 ? std::log2(static_cast<double>(code.size())) : 0.0;
    const double size_floor = cqcap::theorem2_size_bound(p, w, cfg.n, cfg.lambda, cfg.tau);
    const cqcap::ConverseReport full =
        cqcap::full_converse_report(code, w, cfg.lambda, cap);
    const bool floor_ok = size_floor <= 0.0 || code.size() == 0 || log2_size >= size_floor - 1e-9;
    const bool sandwich_ok = floor_ok && full.pass;

    OutputTarget target(cfg.out_path);
    std::ostream& out = target.stream();
    out << "key,value\n";
    out << "size," << code.size() << "\n";
    out << "rate_bits," << cqcap::csv_double(code.size() > 0 ? log2_size / cfg.n : 0.0) << "\n";
    out << "error," << cqcap::csv_double(cqcap::error_probability(code, w, cfg.dense_cap))
        << "\n";
    out << "size_floor_bits," << cqcap::csv_double(size_floor) << "\n";
    out << "converse_ceiling_bits," << cqcap::csv_double(full.bound_log2) << "\n";
    out << "sandwich," << (sandwich_ok ? "pass" : "fail") << "\n";
    return sandwich_ok ? kExitPass : kExitViolation;
}

int cmd_converse_check(const RunConfig& cfg) {
    const cqcap::CqChannel w = cqcap::load_channel(cfg.channel_path);
    const cqcap::Code code = cqcap::load_code(cfg.code_path, w);
    const double lambda = cfg.lambda_set ? cfg.lambda : code.lambda();
    OutputTarget target(cfg.out_path);
    cqcap::CsvWriter csv(target.stream());
    csv.header(cqcap::suite_csv_columns());
    int violations = 0;
    auto emit = [&](const std::string& params, const cqcap::BoundCheck& c) {
        if (!c.pass) {
            ++violations;
        }
        csv.row({"converse", "0", params, c.name, cqcap::csv_double(c.bound),
                 cqcap::csv_double(c.achieved), cqcap::csv_double(c.slack), c.pass ? "1" : "0",
                 c.witness});
    };

    std::ostringstream base;
    base << "n=" << code.block_length() << ";lambda=" << lambda << ";size=" << code.size();
    emit(base.str(), cqcap::ceiling_check("error_within_lambda",
                                          cqcap::error_probability(code, w, cfg.dense_cap),
                                          lambda, 1e-9, code.size() == 0));

    const cqcap::CapacityResult cap = cqcap::capacity(w, cfg.tol);
    const cqcap::ConverseReport full = cqcap::full_converse_report(code, w, lambda, cap);
    emit(base.str(), cqcap::ceiling_check("size_within_full_ceiling", full.log2_size,
                                          full.bound_log2, 1e-9, code.size() == 0));

    if (code.size() > 0) {
        const cqcap::Code part = cqcap::largest_constant_composition_subcode(code);
        std::ostringstream sub;
        sub << base.str() << ";subcode_size=" << part.size();
        const cqcap::ConverseReport cc =
            cqcap::constant_composition_converse_report(part, w, lambda);
        emit(sub.str(), cqcap::ceiling_check("size_within_cc_ceiling", cc.log2_size,
                                             cc.bound_log2, 1e-9));
        const cqcap::ModifiedDecoderReport mod =
            cqcap::modified_decoder_check(part, w, lambda, cfg.dense_cap);
        for (const cqcap::BoundCheck& c : mod.checks) {
            emit(sub.str(), c);
        }
    }
    return violations == 0 ? kExitPass : kExitViolation;
}

int cmd_holevo_check(const RunConfig& cfg) {
    OutputTarget target(cfg.out_path);
    if (cfg.channel_path.empty()) {
        const cqcap::SuiteOutcome outcome =
            cqcap::run_holevo_suite(cfg.trials, cfg.seed, target.stream());
        std::cerr << "suite holevo: " << outcome.trials << " trials, " << outcome.violations
                  << " violations\n";
        return outcome.violations == 0 ? kExitPass : kExitViolation;
    }
    const cqcap::CqChannel w = cqcap::load_channel(cfg.channel_path);
    cqcap::CsvWriter csv(target.stream());
    csv.header(cqcap::suite_csv_columns());
    int violations = 0;
    for (int t = 0; t < cfg.trials; ++t) {
        cqcap::RandomStream rng(cfg.seed, static_cast<std::uint64_t>(t));
        const cqcap::InputDistribution p = rng.distribution(w.alphabet_size());
        const int outcomes = 1 + rng.uniform_int(6);
        const cqcap::HolevoReport report =
            cqcap::holevo_bound_check(w, p, rng.povm(w.dim(), outcomes));
        if (!report.check.pass) {
            ++violations;
        }
        std::ostringstream params;
        params << "outcomes=" << outcomes;
        csv.row({"holevo", std::to_string(t), params.str(), report.check.name,
                 cqcap::csv_double(report.check.bound), cqcap::csv_double(report.check.achieved),
                 cqcap::csv_double(report.check.slack), report.check.pass ? "1" : "0",
                 report.check.witness});
    }
    std::cerr << "holevo-check: " << cfg.trials << " trials, " << violations << " violations\n";
    return violations == 0 ? kExitPass : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"classical-quantum channel capacity and coding bound checks"};
    app.require_subcommand(1);
    RunConfig cfg;

    CLI::App* capacity = app.add_subcommand("capacity", "channel capacity via the iterative maximizer");
    capacity->add_option("--channel", cfg.channel_path, "channel JSON file")->required();
    capacity->add_option("--tol", cfg.tol, "duality gap tolerance");
    capacity->add_option("--out", cfg.out_path, "report path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run a Monte Carlo verification suite");
    verify->add_option("--suite", cfg.suite,
                       "one of types, projector, shadow, weaklaw, fidelity, gentle, holevo")
        ->required();
    verify->add_option("--trials", cfg.trials, "trial count");
    verify->add_option("--seed", cfg.seed, "master seed");
    verify->add_option("--out", cfg.out_path, "CSV path (default stdout)");

    CLI::App* build = app.add_subcommand("code-build", "greedy maximal code construction");
    build->add_option("--channel", cfg.channel_path, "channel JSON file")->required();
    build->add_option("--n", cfg.n, "block length")->required();
    build->add_option("--lambda", cfg.lambda, "error budget in (0,1)")->required();
    build->add_option("--tau", cfg.tau, "candidate set mass in (0,1]");
    build->add_option("--dist", cfg.dist, "input distribution: capacity or uniform")
        ->check(CLI::IsMember({"capacity", "uniform"}));
    build->add_option("--tol", cfg.tol, "capacity tolerance for the default distribution");
    build->add_option("--code", cfg.code_path, "write the code file here");
    build->add_option("--out", cfg.out_path, "report path (default stdout)");
    build->add_option("--dense-cap", cfg.dense_cap, "largest dense dimension");

    CLI::App* converse = app.add_subcommand("converse-check", "strong converse checks on a code");
    converse->add_option("--channel", cfg.channel_path, "channel JSON file")->required();
    converse->add_option("--code", cfg.code_path, "code JSON file")->required();
    CLI::Option* lambda_opt =
        converse->add_option("--lambda", cfg.lambda, "error budget (default: the code's)");
    converse->add_option("--tol", cfg.tol, "capacity tolerance");
    converse->add_option("--out", cfg.out_path, "CSV path (default stdout)");
    converse->add_option("--dense-cap", cfg.dense_cap, "largest dense dimension");

    CLI::App* holevo = app.add_subcommand("holevo-check", "measurement information bound checks");
    holevo->add_option("--channel", cfg.channel_path,
                       "channel JSON file (omit to randomize channels too)");
    holevo->add_option("--trials", cfg.trials, "trial count");
    holevo->add_option("--seed", cfg.seed, "master seed");
    holevo->add_option("--out", cfg.out_path, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (capacity->parsed()) {
            return cmd_capacity(cfg);
        }
        if (verify->parsed()) {
            return cmd_verify(cfg);
        }
        if (build->parsed()) {
            return cmd_code_build(cfg);
        }
        if (converse->parsed()) {
            cfg.lambda_set = lambda_opt->count() > 0;
            return cmd_converse_check(cfg);
        }
        if (holevo->parsed()) {
            return cmd_holevo_check(cfg);
        }
        std::cerr << "error: no subcommand\n";
        return kExitInput;
    } catch (const cqcap::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const cqcap::OptimizerError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOptimizer;
    } catch (const cqcap::SolverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOptimizer;
    } catch (const cqcap::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
