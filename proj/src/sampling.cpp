#include "chanspace/sampling.hpp"

#include "chanspace/errors.hpp"

#include <algorithm>
#include <numeric>

namespace chanspace {

Ranking random_ranking(int n, SplitMix64& rng) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(order[i], order[j]);
    }
    return Ranking::from_rank_order(std::move(order));
}

std::vector<int> random_composition(int total, int parts, SplitMix64& rng) {
    if (parts < 1 || total < parts)
        throw Error(ErrorKind::domain, "composition needs total >= parts >= 1");
    // Distinct cut points in [1, total-1] turn into part sizes.
    std::vector<int> cuts;
    cuts.reserve(parts - 1);
    while (static_cast<int>(cuts.size()) < parts - 1) {
        int c = static_cast<int>(rng.between(1, static_cast<std::uint64_t>(total) - 1));
        if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<int> out(parts);
    int previous = 0;
    for (int k = 0; k < parts - 1; ++k) {
        out[k] = cuts[k] - previous;
        previous = cuts[k];
    }
    out[parts - 1] = total - previous;
    return out;
}

Channel random_channel(int inputs, int outputs, int denominator, SplitMix64& rng) {
    if (denominator < outputs)
        throw Error(ErrorKind::domain, "denominator must be at least the output count");
    std::vector<std::vector<Rat>> rows(inputs);
    for (int i = 0; i < inputs; ++i) {
        std::vector<int> numerators = random_composition(denominator, outputs, rng);
        rows[i].reserve(outputs);
        for (int j = 0; j < outputs; ++j) rows[i].emplace_back(numerators[j], denominator);
    }
    return Channel::validated(Matrix::from_rows(std::move(rows)));
}

Channel random_stable_channel(int inputs, int outputs, int denominator, SplitMix64& rng,
                              int max_tries) {
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        Channel candidate = random_channel(inputs, outputs, denominator, rng);
        if (is_stable(candidate)) return candidate;
    }
    throw Error(ErrorKind::domain, "failed to draw a stable channel; denominator too small");
}

namespace {

// Largest mass that can leave entry (row, col) without disturbing the
// column's strict order or the entry's sign. Zero when nothing can move.
Rat departable(const Matrix& m, int row, int col) {
    const Rat& value = m.at(row, col);
    Rat floor(-1);
    for (int i = 0; i < m.rows(); ++i) {
        if (i == row) continue;
        if (m.at(i, col) < value && (floor < 0 || m.at(i, col) > floor)) floor = m.at(i, col);
    }
    Rat headroom = floor < 0 ? value : value - floor;
    return headroom / 2;
}

// Largest mass entry (row, col) can absorb while staying strictly below
// the next larger entry in its column.
Rat absorbable(const Matrix& m, int row, int col) {
    const Rat& value = m.at(row, col);
    Rat ceiling(-1);
    for (int i = 0; i < m.rows(); ++i) {
        if (i == row) continue;
        if (m.at(i, col) > value && (ceiling < 0 || m.at(i, col) < ceiling))
            ceiling = m.at(i, col);
    }
    if (ceiling < 0) return 1;  // already the column maximum
    return (ceiling - value) / 2;
}

}  // namespace

Channel cone_preserving_variant(const Channel& channel, SplitMix64& rng, int moves) {
    if (!is_stable(channel))
        throw Error(ErrorKind::domain, "cone-preserving perturbation needs a stable channel");
    if (channel.outputs() < 2) return channel;

    Matrix entries = channel.entries();
    const int attempt_budget = moves * 8;
    int remaining = moves;
    for (int attempt = 0; attempt < attempt_budget && remaining > 0; ++attempt) {
        int row = static_cast<int>(rng.below(entries.rows()));
        int from = static_cast<int>(rng.below(entries.cols()));
        int to = static_cast<int>(rng.below(entries.cols()));
        if (from == to) continue;
        Rat step = std::min(departable(entries, row, from), absorbable(entries, row, to));
        if (step <= 0) continue;
        entries.at(row, from) -= step;
        entries.at(row, to) += step;
        --remaining;
    }
    return Channel::validated(std::move(entries));
}

std::vector<Rat> random_vector(int length, int max_numerator, SplitMix64& rng) {
    std::vector<Rat> out(length);
    for (int i = 0; i < length; ++i)
        out[i] = Rat(static_cast<long long>(rng.below(max_numerator + 1)), max_numerator + 1);
    return out;
}

}  // namespace chanspace
