#pragma once

#include <cstdint>
#include <vector>

#include "cqcap/channel.hpp"
#include "cqcap/input_distribution.hpp"
#include "cqcap/operators.hpp"
#include "cqcap/types.hpp"

namespace cqcap {

// SplitMix64 finalizer, also used to derive substream seeds.
std::uint64_t mix64(std::uint64_t z);

// Deterministic generator with hand-rolled samplers so output is identical
// across platforms and standard-library versions. Substream k of master seed
// s starts from mix64(s ^ mix64(k + golden ratio)); trial k of a Monte Carlo
// suite draws everything from substream k.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : state_(mix64(seed ^ kGolden)) {}
    RandomStream(std::uint64_t master_seed, std::uint64_t stream_index)
        : state_(mix64(master_seed ^ mix64(stream_index + kGolden))) {}

    std::uint64_t next_u64();
    double uniform();       // [0, 1), 53 random bits
    double normal();        // standard normal via Box-Muller
    int uniform_int(int n); // uniform on {0, ..., n-1}

    Vector ket(int d); // uniform on the unit sphere
    DensityOperator pure_state(int d);
    // Wishart-style G G^dagger / Tr, full rank when rank is 0 or d.
    DensityOperator mixed_state(int d, int rank = 0);
    // Random Hermitian rescaled so its spectrum spans exactly [0, 1].
    HermitianOperator contraction(int d);
    CqChannel channel(int a, int d);
    // All output states diagonal in the canonical basis.
    CqChannel commuting_channel(int a, int d);
    InputDistribution distribution(int a); // flat Dirichlet
    // Random PSD pile normalized into a POVM by S^{-1/2} E_y S^{-1/2}.
    std::vector<Matrix> povm(int d, int outcomes);
    Word word(int n, int a); // iid uniform letters
    void shuffle(Word& w);

  private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace cqcap
