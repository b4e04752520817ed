#pragma once

#include "chanspace/ranking.hpp"
#include "chanspace/rational.hpp"

#include <cstdint>
#include <vector>

namespace chanspace {

// The closed-form operations below are quadratic in n; the cap keeps the
// 2^f terms to a few thousand bits.
inline constexpr int kMaxClosedFormSize = 4096;

// Number of nonempty codes on which two decoding rankings pick the same
// maximum-likelihood codeword. Exact at every size.
struct AgreementCount {
    Int value;
    int n = 0;

    // value / (2^n - 1), the agreement probability over a uniform code.
    Rat probability() const;
};

// For input i (0-based), the number of later-labelled inputs that the
// ranking places below i. Exponent of i's term in the agreement count.
int agreement_exponent(const Ranking& sigma, int input);
std::vector<int> agreement_exponents(const Ranking& sigma);

// Codes on which sigma decodes like the identity ranking:
// sum over inputs of 2^exponent.
AgreementCount agreement_count(const Ranking& sigma);

// Codes on which sigma and phi decode alike; reduces to the single-ranking
// count of inverse(phi) ∘ sigma.
AgreementCount agreement_count(const Ranking& sigma, const Ranking& phi);

Rat agreement_probability(const Ranking& sigma, const Ranking& phi);

// 1 - agreement probability. Zero exactly on equal rankings; symmetric;
// the triangle inequality is surveyed by `verify`, never assumed.
Rat decoding_distance(const Ranking& sigma, const Ranking& phi);

// Change in agreement count when the adjacent transposition of inputs
// r, r+1 is applied on the left:
//   -2^(exponent(r)-1)  when sigma ranks r above r+1,
//   +2^(exponent(r+1))  otherwise.
Int adjacent_swap_delta(const Ranking& sigma, int r);

// Inversions of inverse(phi) ∘ sigma: the minimum number of adjacent
// swaps between the two rankings.
std::uint64_t kendall_tau(const Ranking& sigma, const Ranking& phi);

}  // namespace chanspace
