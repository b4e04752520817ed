#pragma once

#include "chanspace/rational.hpp"

#include <span>
#include <vector>

namespace chanspace {

class Ranking;

// Tie detection when ranking the entries of a column. Exact comparison is
// the default; epsilon(e) chains consecutive sorted values whose gap is at
// most e into one block. epsilon(0) coincides with exact().
class TieRule {
public:
    TieRule() = default;  // exact

    static TieRule exact() { return TieRule(); }
    static TieRule epsilon(Rat tolerance);

    const Rat& tolerance() const noexcept { return tolerance_; }
    bool is_exact() const noexcept { return tolerance_ == 0; }

private:
    Rat tolerance_{0};
};

// A weak order on the n inputs, stored as its dense rank vector:
// rank(i) = k means input i carries the k-th largest value, with ties
// sharing a rank. Rank values are 1-based and use exactly {1..blocks}.
class WeakOrder {
public:
    explicit WeakOrder(std::vector<int> ranks);

    int size() const noexcept { return static_cast<int>(ranks_.size()); }
    int rank(int input) const;
    const std::vector<int>& ranks() const noexcept { return ranks_; }

    int block_count() const noexcept { return blocks_; }
    bool tie_free() const noexcept { return blocks_ == size(); }

    // Ordered partition of the inputs, most-likely block first. 0-based.
    std::vector<std::vector<int>> blocks() const;

    // Only defined when tie-free: the permutation with the same ranks.
    Ranking to_ranking() const;

    bool operator==(const WeakOrder& other) const { return ranks_ == other.ranks_; }

private:
    std::vector<int> ranks_;
    int blocks_ = 0;
};

// Dense descending ranking of a vector's entries; total on any input.
WeakOrder weak_order_of(std::span<const Rat> values, const TieRule& tie = TieRule());

// Dimension of the cone of all vectors sharing this weak order.
int cone_dimension(const WeakOrder& order) noexcept;

inline constexpr int kWeakOrderEnumerationLimit = 6;

// All weak orders on n elements, in lexicographic rank-vector order.
// The count is the n-th Fubini number; n! of them are tie-free.
std::vector<WeakOrder> enumerate_weak_orders(int n, int limit = kWeakOrderEnumerationLimit);

// Fubini (ordered Bell) number: |W_n|.
Int weak_order_count(int n);

}  // namespace chanspace
