#include "chanspace/weak_order.hpp"

#include "chanspace/errors.hpp"
#include "chanspace/ranking.hpp"

#include <algorithm>
#include <numeric>

namespace chanspace {

TieRule TieRule::epsilon(Rat tolerance) {
    if (tolerance < 0) throw Error(ErrorKind::domain, "tie tolerance must be non-negative");
    TieRule rule;
    rule.tolerance_ = std::move(tolerance);
    return rule;
}

WeakOrder::WeakOrder(std::vector<int> ranks) : ranks_(std::move(ranks)) {
    if (ranks_.empty()) throw Error(ErrorKind::domain, "weak order must be nonempty");
    int max_rank = 0;
    for (int r : ranks_) {
        if (r < 1 || r > size())
            throw Error(ErrorKind::domain, "rank values must lie in 1.." + std::to_string(size()));
        max_rank = std::max(max_rank, r);
    }
    std::vector<bool> seen(max_rank, false);
    for (int r : ranks_) seen[r - 1] = true;
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw Error(ErrorKind::domain, "rank vector is not dense");
    blocks_ = max_rank;
}

int WeakOrder::rank(int input) const {
    if (input < 0 || input >= size()) throw IndexOutOfRange("input", input);
    return ranks_[input];
}

std::vector<std::vector<int>> WeakOrder::blocks() const {
    std::vector<std::vector<int>> out(blocks_);
    for (int i = 0; i < size(); ++i) out[ranks_[i] - 1].push_back(i);
    return out;
}

Ranking WeakOrder::to_ranking() const {
    if (!tie_free()) throw Error(ErrorKind::domain, "weak order with ties has no ranking");
    std::vector<int> zero_based(ranks_.size());
    for (size_t i = 0; i < ranks_.size(); ++i) zero_based[i] = ranks_[i] - 1;
    return Ranking::from_ranks(std::move(zero_based));
}

WeakOrder weak_order_of(std::span<const Rat> values, const TieRule& tie) {
    const int n = static_cast<int>(values.size());
    if (n == 0) throw Error(ErrorKind::domain, "cannot rank an empty vector");

    std::vector<int> by_value(n);
    std::iota(by_value.begin(), by_value.end(), 0);
    std::sort(by_value.begin(), by_value.end(),
              [&](int a, int b) { return values[a] > values[b]; });

    std::vector<int> ranks(n);
    int current = 1;
    ranks[by_value[0]] = current;
    for (int k = 1; k < n; ++k) {
        const Rat& prev = values[by_value[k - 1]];
        const Rat& cur = values[by_value[k]];
        if (prev - cur > tie.tolerance()) ++current;
        ranks[by_value[k]] = current;
    }
    return WeakOrder(std::move(ranks));
}

int cone_dimension(const WeakOrder& order) noexcept { return order.block_count(); }

std::vector<WeakOrder> enumerate_weak_orders(int n, int limit) {
    if (n < 1) throw Error(ErrorKind::domain, "weak orders need at least one element");
    if (n > limit) throw TooLarge(n, limit);

    // Odometer over {1..n}^n, keeping the dense vectors. Cheap at the
    // supported sizes (6^6 candidates for the default limit).
    std::vector<WeakOrder> out;
    std::vector<int> ranks(n, 1);
    while (true) {
        int max_rank = 0;
        for (int r : ranks) max_rank = std::max(max_rank, r);
        std::vector<bool> seen(max_rank, false);
        for (int r : ranks) seen[r - 1] = true;
        if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
            out.emplace_back(ranks);

        int pos = n - 1;
        while (pos >= 0 && ranks[pos] == n) {
            ranks[pos] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++ranks[pos];
    }
    return out;
}

Int weak_order_count(int n) {
    if (n < 0) throw Error(ErrorKind::domain, "weak order count needs n >= 0");
    // a(k) = sum_{j=1..k} C(k,j) a(k-j)
    std::vector<Int> counts(static_cast<size_t>(n) + 1);
    counts[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Int total = 0;
        Int binomial = 1;  // C(k, j) built incrementally
        for (int j = 1; j <= k; ++j) {
            binomial = binomial * (k - j + 1) / j;
            total += binomial * counts[k - j];
        }
        counts[k] = total;
    }
    return counts[n];
}

}  // namespace chanspace
