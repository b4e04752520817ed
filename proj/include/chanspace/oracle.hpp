#pragma once

#include "chanspace/channel.hpp"
#include "chanspace/perm_metrics.hpp"
#include "chanspace/ranking.hpp"
#include "chanspace/rng.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chanspace {

// Brute-force ground truth. Everything here works by definition --
// explicit codes, explicit argmax decoding, explicit enumeration -- and
// never through the closed forms it is used to check.

// Exhaustive code enumeration is exponential in the input count.
inline constexpr int kMaxEnumerationSize = 20;

// Nonempty subset of the n inputs, as a bitmask. Input i is member i.
class Code {
public:
    Code(int universe, std::uint32_t mask);
    static Code from_members(int universe, std::span<const int> members);

    int universe_size() const noexcept { return universe_; }
    std::uint32_t mask() const noexcept { return mask_; }
    bool contains(int input) const noexcept { return (mask_ >> input) & 1u; }
    int size() const noexcept;
    std::vector<int> members() const;

    bool operator==(const Code& other) const = default;

private:
    int universe_ = 0;
    std::uint32_t mask_ = 0;
};

// Argmax set of a column restricted to a code; all maximizers when tied.
struct DecodeResult {
    std::uint32_t winners = 0;

    std::vector<int> members() const;
    bool is_singleton() const noexcept { return winners != 0 && (winners & (winners - 1)) == 0; }
    bool operator==(const DecodeResult& other) const = default;
};

DecodeResult ml_decode(std::span<const Rat> column, const Code& code);

// Codes on which the two rankings' unique top members coincide, counted
// over all 2^n - 1 nonempty codes.
AgreementCount oracle_agreement_count(const Ranking& sigma, const Ranking& phi,
                                      int limit = kMaxEnumerationSize);

// Total enumeration of Pr(decoders of p and q agree on a random code and
// a random output received through p). Checks the closed form exactly.
Rat oracle_radial_probability(const Channel& p, const Channel& q, const TieRule& tie = TieRule(),
                              const std::optional<std::vector<Rat>>& prior = std::nullopt,
                              int limit = kMaxEnumerationSize);

// Codes whose decoders agree simultaneously on every output column.
AgreementCount oracle_global_agreement(const Channel& p, const Channel& q,
                                       const TieRule& tie = TieRule(),
                                       int limit = kMaxEnumerationSize);

// Definitional decoding equivalence: identical ML winner sets for every
// nonempty code and every column. Ties allowed, so unstable inputs are
// fine; this is what the weak-order matrix comparison is checked against.
bool oracle_decoding_equivalent(const Matrix& p, const Matrix& q,
                                int limit = kMaxEnumerationSize);

// Uniform draw over all nonempty codes.
Code sample_code(int universe, SplitMix64& rng);

struct MonteCarloEstimate {
    std::uint64_t samples = 0;
    std::uint64_t agreements = 0;
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t seed = 0;
    std::string generator = SplitMix64::kAlgorithm;

    Rat exact_estimate() const { return Rat(Int(agreements), Int(samples)); }
};

// Seeded statistical cross-check of the radial closed form: codes drawn
// uniformly, outputs drawn from output_distribution(p). Sample k uses the
// sub-stream derive(seed, k), so results are independent of any worker
// partitioning and bit-identical for a fixed seed.
MonteCarloEstimate monte_carlo_radial(const Channel& p, const Channel& q, std::uint64_t samples,
                                      std::uint64_t seed, const TieRule& tie = TieRule(),
                                      const std::optional<std::vector<Rat>>& prior = std::nullopt);

}  // namespace chanspace
