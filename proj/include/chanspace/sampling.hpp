#pragma once

#include "chanspace/channel.hpp"
#include "chanspace/ranking.hpp"
#include "chanspace/rng.hpp"

#include <vector>

namespace chanspace {

// Deterministic instance generators for randomized verification sweeps
// and property tests. Every draw comes from the caller's SplitMix64, so
// an instance is fully determined by its sub-stream seed.

Ranking random_ranking(int n, SplitMix64& rng);

// `parts` positive integers summing to `total`, uniform over compositions.
std::vector<int> random_composition(int total, int parts, SplitMix64& rng);

// Row-stochastic channel with entries k/denominator; rows sum exactly to
// 1. Columns may contain ties (small denominators make them frequent).
Channel random_channel(int inputs, int outputs, int denominator, SplitMix64& rng);

// Rejection-samples random_channel until every column is tie-free.
Channel random_stable_channel(int inputs, int outputs, int denominator, SplitMix64& rng,
                              int max_tries = 10000);

// A channel with the same weak order matrix but different entries:
// repeatedly moves probability mass between two entries of one row, each
// move small enough to keep every column's strict order. Input must be
// stable under exact comparison.
Channel cone_preserving_variant(const Channel& channel, SplitMix64& rng, int moves = 6);

// Entries drawn from {0..max_numerator}/(max_numerator+1).
std::vector<Rat> random_vector(int length, int max_numerator, SplitMix64& rng);

}  // namespace chanspace
