#pragma once

#include <vector>

namespace chanspace {

// A full-dimensional decoding cone, identified with a permutation of the
// inputs. Two views are kept in sync:
//
//   rank_order()[k] = the input sitting at rank k (rank 0 = most likely),
//   ranks()[i]      = the rank of input i.
//
// Indices and ranks are 0-based internally; serialization is 1-based and
// always carries the convention string "rank1=most-likely".
class Ranking {
public:
    static Ranking identity(int n);

    // order[k] = input at rank k. Must be a permutation of 0..n-1.
    static Ranking from_rank_order(std::vector<int> order);

    // ranks[i] = rank of input i. Must be a permutation of 0..n-1.
    static Ranking from_ranks(std::vector<int> ranks);

    int size() const noexcept { return static_cast<int>(order_.size()); }
    int input_at(int rank) const;
    int rank_of(int input) const;
    const std::vector<int>& rank_order() const noexcept { return order_; }
    const std::vector<int>& ranks() const noexcept { return ranks_; }

    Ranking inverse() const;

    bool operator==(const Ranking& other) const = default;

private:
    Ranking(std::vector<int> order, std::vector<int> ranks)
        : order_(std::move(order)), ranks_(std::move(ranks)) {}

    std::vector<int> order_;
    std::vector<int> ranks_;
};

// (outer ∘ inner)(k) = outer(inner(k)), on the rank-order view.
Ranking compose(const Ranking& outer, const Ranking& inner);

// The adjacent transposition swapping inputs r and r+1 (0-based r).
Ranking adjacent_transposition(int n, int r);

}  // namespace chanspace
