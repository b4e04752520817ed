#pragma once

#include "chanspace/channel.hpp"
#include "chanspace/oracle.hpp"
#include "chanspace/rational.hpp"
#include "chanspace/weak_order.hpp"

#include <optional>
#include <vector>

namespace chanspace {

// Everything needed to audit a radial agreement computation: one entry
// per output column, plus the aggregate probability and distance.
struct AgreementReport {
    int inputs = 0;
    std::vector<Int> per_column_s;
    std::vector<Rat> column_norms;    // 1-norms of the true channel's columns
    std::vector<Rat> output_weights;  // Pr(output j received) under the prior
    Rat probability{0};
    Rat distance{1};
    bool uniform_prior = true;
};

// Pr(output j received) = sum_i entries(i, j) * prior(i). The uniform
// prior is the default; entries sum to 1.
std::vector<Rat> output_distribution(const Channel& p);
std::vector<Rat> output_distribution(const Channel& p, const std::vector<Rat>& prior);

// Probability that the decoders of q match those of the true channel p on
// a uniformly random nonempty code and a received output drawn through p:
//   sum over columns of S(sigma_j, phi_j) * Pr(y_j) / (2^n - 1),
// which under the uniform prior is the column-1-norm weighted form
//   (1 / (n (2^n - 1))) * sum_j S(sigma_j, phi_j) * ||P_j||_1.
// Both channels must be stable. Asymmetric in (p, q) by design: p fixes
// the output weights.
AgreementReport radial_agreement(const Channel& p, const Channel& q,
                                 const TieRule& tie = TieRule(),
                                 const std::optional<std::vector<Rat>>& prior = std::nullopt);

Rat radial_agreement_probability(const Channel& p, const Channel& q,
                                 const TieRule& tie = TieRule(),
                                 const std::optional<std::vector<Rat>>& prior = std::nullopt);

// 1 - radial agreement probability. Depends on q only through its weak
// order matrix, but on p through its actual entries.
Rat radial_decoding_distance(const Channel& p, const Channel& q,
                             const TieRule& tie = TieRule(),
                             const std::optional<std::vector<Rat>>& prior = std::nullopt);

// Unrefined distance: 1 - (#codes whose full decoders, output by output,
// coincide) / (2^n - 1). No closed form; computed by exhaustive
// enumeration over all nonempty codes (capped by `limit`).
Rat global_decoding_distance(const Channel& p, const Channel& q, const TieRule& tie = TieRule(),
                             int limit = kMaxEnumerationSize);

}  // namespace chanspace
