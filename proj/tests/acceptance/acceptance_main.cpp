// Acceptance gate: runs every required property suite at full scale with
// its runtime budget, checks the named reference values, and reruns every
// randomized suite to confirm byte-identical output. Prints one PASS/FAIL
// line per criterion and exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "cqcap/channel.hpp"
#include "cqcap/coding.hpp"
#include "cqcap/suites.hpp"
#include "oracles.hpp"

namespace {

constexpr std::uint64_t kSeed = 20250814;

int failures = 0;

void report(bool pass, const std::string& label, const std::string& detail = "") {
    if (!pass) {
        ++failures;
    }
    std::cout << (pass ? "PASS" : "FAIL") << ": " << label;
    if (!detail.empty()) {
        std::cout << " (" << detail << ")";
    }
    std::cout << "\n" << std::flush;
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Runs one randomized suite, records its CSV for the determinism criterion,
// and returns elapsed seconds through `elapsed`.
std::map<std::string, std::pair<int, std::string>> g_first_runs; // name -> (trials, csv)

cqcap::SuiteOutcome run_and_record(const std::string& name, int trials, double* elapsed) {
    std::ostringstream csv;
    const auto start = std::chrono::steady_clock::now();
    const auto outcome = cqcap::run_suite(name, trials, kSeed, csv);
    if (elapsed != nullptr) {
        *elapsed = seconds_since(start);
    }
    g_first_runs[name] = {trials, csv.str()};
    return outcome;
}

std::string violation_detail(const cqcap::SuiteOutcome& o, double elapsed, double budget) {
    std::ostringstream ss;
    ss << o.trials << " trials, " << o.violations << " violations, " << std::fixed;
    ss.precision(1);
    ss << elapsed << " s of " << budget << " s";
    return ss.str();
}

void check_counting_suite() {
    double elapsed = 0.0;
    const auto o = run_and_record("types", 200, &elapsed);
    report(o.violations == 0 && elapsed < 30.0,
           "counting bounds for typical sets, 200 random distributions",
           violation_detail(o, elapsed, 30.0));
}

void check_projector_suites() {
    double t1 = 0.0;
    const auto proj = run_and_record("projector", 100, &t1);
    double t2 = 0.0;
    const auto shadow = run_and_record("shadow", 100, &t2);
    const double elapsed = t1 + t2;
    report(proj.violations == 0 && shadow.violations == 0 && elapsed < 120.0,
           "typical projector and shadow bounds, 100 states + 100 channels + 100 triples",
           violation_detail(proj, t1, 120.0) + "; shadow " + violation_detail(shadow, t2, 120.0));
}

void check_weaklaw_suite() {
    double elapsed = 0.0;
    const auto o = run_and_record("weaklaw", 50, &elapsed);
    report(o.violations == 0, "weak law for conditional typicality, 50 random channels",
           violation_detail(o, elapsed, 120.0));
}

void check_distance_suites() {
    double t1 = 0.0;
    const auto fid = run_and_record("fidelity", 1000, &t1);
    double t2 = 0.0;
    const auto gentle = run_and_record("gentle", 10000, &t2);
    const double elapsed = t1 + t2;
    report(fid.violations == 0 && gentle.violations == 0 && elapsed < 60.0,
           "fidelity sandwich (1000 pairs) and gentle measurement (10000 trials)",
           violation_detail(fid, t1, 60.0) + "; gentle " + violation_detail(gentle, t2, 60.0));
}

std::string g_fleet_csv;

void check_coding_fleet() {
    std::ostringstream csv;
    const auto start = std::chrono::steady_clock::now();
    const auto o = cqcap::run_coding_fleet(20, kSeed, csv);
    const double elapsed = seconds_since(start);
    g_fleet_csv = csv.str();
    report(o.violations == 0 && elapsed < 600.0,
           "greedy code fleet sandwich, 20 random + 2 named channels",
           violation_detail(o, elapsed, 600.0));
}

void check_named_values() {
    const auto orth = cqcap::orthogonal_pure_channel();
    const auto zp = cqcap::zero_plus_channel();

    const double orth_cap = cqcap::capacity(orth, 1e-9).capacity;
    report(std::abs(orth_cap - 1.0) <= 1e-6, "orthogonal qubit pair capacity is 1 bit",
           "got " + std::to_string(orth_cap));

    const double zp_cap = cqcap::capacity(zp, 1e-9).capacity;
    const double zp_grid = cqcap::capacity_grid_oracle(zp, 0.0005);
    report(std::abs(zp_cap - 0.600876) <= 1e-4 && std::abs(zp_cap - zp_grid) <= 1e-4,
           "zero/plus capacity matches the grid search",
           "iterative " + std::to_string(zp_cap) + ", grid " + std::to_string(zp_grid));

    cqcap::Matrix w0 = cqcap::Matrix::Zero(2, 2);
    cqcap::Matrix w1 = cqcap::Matrix::Zero(2, 2);
    w0(0, 0) = 0.9;
    w0(1, 1) = 0.1;
    w1(0, 0) = 0.1;
    w1(1, 1) = 0.9;
    const cqcap::CqChannel bsc({cqcap::DensityOperator(w0), cqcap::DensityOperator(w1)});
    const double bsc_cap = cqcap::capacity(bsc, 1e-9).capacity;
    Eigen::MatrixXd t(2, 2);
    t << 0.9, 0.1, 0.1, 0.9;
    const double bsc_classical = testsupport::classical_ba_capacity(t, 1e-10);
    report(std::abs(bsc_cap - 0.531004) <= 1e-6 &&
               std::abs(bsc_cap - bsc_classical) <= 1e-6,
           "commuting BSC(0.1) embedding matches the classical optimizer",
           "quantum " + std::to_string(bsc_cap) + ", classical " +
               std::to_string(bsc_classical));

    const cqcap::Code code = cqcap::greedy_code_build(
        orth, cqcap::InputDistribution::uniform(2), 2, 0.5, 1.0);
    const double err = cqcap::error_probability(code, orth);
    report(code.size() == 4 && err < 1e-12,
           "greedy code on the orthogonal pair at n=2 is the full codebook",
           "size " + std::to_string(code.size()) + ", error " + std::to_string(err));
}

void check_holevo_suite() {
    double elapsed = 0.0;
    const auto o = run_and_record("holevo", 500, &elapsed);
    report(o.violations == 0 && elapsed < 60.0,
           "measurement information bound, 500 random triples",
           violation_detail(o, elapsed, 60.0));
}

void check_determinism() {
    bool all_equal = true;
    std::string first_mismatch;
    for (const auto& [name, run] : g_first_runs) {
        std::ostringstream again;
        cqcap::run_suite(name, run.first, kSeed, again);
        if (again.str() != run.second) {
            all_equal = false;
            first_mismatch = name;
            break;
        }
    }
    if (all_equal) {
        std::ostringstream again;
        cqcap::run_coding_fleet(20, kSeed, again);
        if (again.str() != g_fleet_csv) {
            all_equal = false;
            first_mismatch = "coding";
        }
    }
    report(all_equal, "reruns with the same seed are byte-identical",
           all_equal ? "all suites and the coding fleet" : "mismatch in " + first_mismatch);
}

} // namespace

int main() {
    try {
        check_counting_suite();
        check_projector_suites();
        check_weaklaw_suite();
        check_distance_suites();
        check_coding_fleet();
        check_named_values();
        check_holevo_suite();
        check_determinism();
    } catch (const std::exception& e) {
        report(false, "acceptance run aborted", e.what());
    }
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
