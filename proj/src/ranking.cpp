#include "chanspace/ranking.hpp"

#include "chanspace/errors.hpp"

#include <numeric>

namespace chanspace {

namespace {

std::vector<int> invert_or_throw(const std::vector<int>& forward, const char* what) {
    const int n = static_cast<int>(forward.size());
    if (n == 0) throw Error(ErrorKind::domain, std::string(what) + " must be nonempty");
    std::vector<int> inverse(n, -1);
    for (int k = 0; k < n; ++k) {
        int v = forward[k];
        if (v < 0 || v >= n || inverse[v] != -1)
            throw Error(ErrorKind::domain, std::string(what) + " is not a permutation of 0.." +
                                               std::to_string(n - 1));
        inverse[v] = k;
    }
    return inverse;
}

}  // namespace

Ranking Ranking::identity(int n) {
    if (n <= 0) throw Error(ErrorKind::domain, "ranking size must be positive");
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    return Ranking(order, order);
}

Ranking Ranking::from_rank_order(std::vector<int> order) {
    auto ranks = invert_or_throw(order, "rank order");
    return Ranking(std::move(order), std::move(ranks));
}

Ranking Ranking::from_ranks(std::vector<int> ranks) {
    auto order = invert_or_throw(ranks, "rank vector");
    return Ranking(std::move(order), std::move(ranks));
}

int Ranking::input_at(int rank) const {
    if (rank < 0 || rank >= size()) throw IndexOutOfRange("rank", rank);
    return order_[rank];
}

int Ranking::rank_of(int input) const {
    if (input < 0 || input >= size()) throw IndexOutOfRange("input", input);
    return ranks_[input];
}

Ranking Ranking::inverse() const {
    // Swapping the two views inverts the permutation.
    return Ranking::from_rank_order(ranks_);
}

Ranking compose(const Ranking& outer, const Ranking& inner) {
    if (outer.size() != inner.size())
        throw DimensionMismatch("cannot compose rankings of sizes " +
                                std::to_string(outer.size()) + " and " +
                                std::to_string(inner.size()));
    std::vector<int> order(outer.size());
    for (int k = 0; k < outer.size(); ++k) order[k] = outer.rank_order()[inner.rank_order()[k]];
    return Ranking::from_rank_order(std::move(order));
}

Ranking adjacent_transposition(int n, int r) {
    if (r < 0 || r + 1 >= n) throw IndexOutOfRange("transposition", r);
    auto id = Ranking::identity(n);
    std::vector<int> order = id.rank_order();
    std::swap(order[r], order[r + 1]);
    return Ranking::from_rank_order(std::move(order));
}

}  // namespace chanspace
