#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "cqcap/channel.hpp"
#include "cqcap/operators.hpp"

namespace cqcap {

// The two named test channels: perfectly distinguishable qubit letters, and
// the nonorthogonal pair {|0>, |+>}.
CqChannel orthogonal_pure_channel();
CqChannel zero_plus_channel();

struct SuiteOutcome {
    std::string suite;
    int trials = 0;
    int violations = 0;
};

// Every suite writes the same CSV schema:
//   suite,trial,params,check,bound,achieved,slack,pass,witness
// sequentially in trial order, so a rerun with the same seed is
// byte-identical. Trial t draws from substream t of the master seed.
const std::vector<std::string>& suite_csv_columns();

// Counting bounds for random distributions, a <= 3, n <= 12, delta in {1,2,4}.
SuiteOutcome run_types_suite(int trials, std::uint64_t seed, std::ostream& out);
// Per trial: one random qubit state and one random (a=2,d=2) channel,
// n <= 8, delta in {1,2,4}, full projector bound reports for both.
SuiteOutcome run_projector_suite(int trials, std::uint64_t seed, std::ostream& out);
// Random commuting triples (Lambda, rho, B) at d = 8 with exact parameters.
SuiteOutcome run_shadow_suite(int trials, std::uint64_t seed, std::ostream& out);
// Random (a=2,d=2) channels and exact-type words, n <= 8, delta in {2,4}.
SuiteOutcome run_weaklaw_suite(int trials, std::uint64_t seed, std::ostream& out);
// Per trial: a pure qubit/qutrit pair and a (pure, mixed) pair with d <= 4,
// the mixed side subnormalized half the time.
SuiteOutcome run_fidelity_suite(int trials, std::uint64_t seed, std::ostream& out);
// Random states and contractions, d <= 6, residual against sqrt(8 lambda).
SuiteOutcome run_gentle_suite(int trials, std::uint64_t seed, std::ostream& out);
// Per trial: a random (channel, POVM, P) triple with d <= 4, a <= 4,
// |Y| <= 6, plus a commuting channel measured in its eigenbasis where the
// classical and quantum mutual informations must agree.
SuiteOutcome run_holevo_suite(int trials, std::uint64_t seed, std::ostream& out);

// Dispatch by suite name {types, projector, shadow, weaklaw, fidelity,
// gentle, holevo}; unknown names raise ValidationError.
SuiteOutcome run_suite(const std::string& name, int trials, std::uint64_t seed,
                       std::ostream& out);

// Greedy-code fleet: the two named channels plus `random_channels` random
// (a=2,d=2) channels, n in {4,6,8}, lambda in {0.3,0.5}, tau = 1, uniform
// input distribution. Each run checks code validity, the per-element trace
// ceiling, non-extendibility, the evaluated size floor when positive, the
// full-code converse ceiling, and per constant-composition subcode the
// composition ceiling plus the modified-decoder report.
SuiteOutcome run_coding_fleet(int random_channels, std::uint64_t seed, std::ostream& out,
                              int dense_cap = kDefaultDenseCap);

} // namespace cqcap
