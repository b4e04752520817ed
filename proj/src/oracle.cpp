#include "chanspace/oracle.hpp"

#include "chanspace/channel_metrics.hpp"
#include "chanspace/errors.hpp"

#include <bit>
#include <cmath>

namespace chanspace {

namespace {

constexpr int kMaskLimit = 31;

void require_enumerable(int n, int limit) {
    if (n > limit || n > kMaskLimit) throw TooLarge(n, std::min(limit, kMaskLimit));
}

void require_same_shape(int pr, int pc, int qr, int qc) {
    if (pr != qr || pc != qc)
        throw DimensionMismatch(std::to_string(pr) + "x" + std::to_string(pc) + " vs " +
                                std::to_string(qr) + "x" + std::to_string(qc));
}

// ranks()[input] per column; throws UnstableChannel naming the culprit.
std::vector<std::vector<int>> stable_rank_table(const Channel& ch, const TieRule& tie,
                                                const std::string& which) {
    std::vector<std::vector<int>> table;
    table.reserve(ch.outputs());
    for (int j = 0; j < ch.outputs(); ++j) {
        WeakOrder order = weak_order_of(ch.column(j), tie);
        if (!order.tie_free()) throw UnstableChannel(which, j);
        table.push_back(order.to_ranking().ranks());
    }
    return table;
}

int top_member(std::uint32_t mask, const std::vector<int>& ranks) {
    int best = -1;
    for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
        int i = std::countr_zero(bits);
        if (best < 0 || ranks[i] < ranks[best]) best = i;
    }
    return best;
}

}  // namespace

Code::Code(int universe, std::uint32_t mask) : universe_(universe), mask_(mask) {
    if (universe < 1 || universe > kMaskLimit)
        throw Error(ErrorKind::domain, "code universe must have 1.." + std::to_string(kMaskLimit) +
                                           " inputs");
    if (mask == 0) throw EmptyCode();
    if (mask >> universe)
        throw Error(ErrorKind::domain, "code members exceed the input set");
}

Code Code::from_members(int universe, std::span<const int> members) {
    std::uint32_t mask = 0;
    for (int m : members) {
        if (m < 0 || m >= universe) throw IndexOutOfRange("code member", m);
        mask |= 1u << m;
    }
    return Code(universe, mask);
}

int Code::size() const noexcept { return std::popcount(mask_); }

std::vector<int> Code::members() const {
    std::vector<int> out;
    for (std::uint32_t bits = mask_; bits != 0; bits &= bits - 1)
        out.push_back(std::countr_zero(bits));
    return out;
}

std::vector<int> DecodeResult::members() const {
    std::vector<int> out;
    for (std::uint32_t bits = winners; bits != 0; bits &= bits - 1)
        out.push_back(std::countr_zero(bits));
    return out;
}

DecodeResult ml_decode(std::span<const Rat> column, const Code& code) {
    if (static_cast<int>(column.size()) != code.universe_size())
        throw DimensionMismatch("column of length " + std::to_string(column.size()) +
                                " against a code over " + std::to_string(code.universe_size()) +
                                " inputs");
    const Rat* best = nullptr;
    std::uint32_t winners = 0;
    for (std::uint32_t bits = code.mask(); bits != 0; bits &= bits - 1) {
        int i = std::countr_zero(bits);
        if (best == nullptr || column[i] > *best) {
            best = &column[i];
            winners = 1u << i;
        } else if (column[i] == *best) {
            winners |= 1u << i;
        }
    }
    return DecodeResult{winners};
}

AgreementCount oracle_agreement_count(const Ranking& sigma, const Ranking& phi, int limit) {
    if (sigma.size() != phi.size())
        throw DimensionMismatch("rankings of sizes " + std::to_string(sigma.size()) + " and " +
                                std::to_string(phi.size()));
    const int n = sigma.size();
    require_enumerable(n, limit);
    const auto& sigma_ranks = sigma.ranks();
    const auto& phi_ranks = phi.ranks();
    const std::uint32_t total = (1u << n) - 1;
    std::uint64_t agreements = 0;
    for (std::uint32_t mask = 1; mask <= total; ++mask)
        if (top_member(mask, sigma_ranks) == top_member(mask, phi_ranks)) ++agreements;
    return AgreementCount{Int(agreements), n};
}

Rat oracle_radial_probability(const Channel& p, const Channel& q, const TieRule& tie,
                              const std::optional<std::vector<Rat>>& prior, int limit) {
    require_same_shape(p.inputs(), p.outputs(), q.inputs(), q.outputs());
    const int n = p.inputs();
    require_enumerable(n, limit);
    // Stability gate only; decoding below goes through raw column values.
    (void)stable_rank_table(p, tie, "P");
    (void)stable_rank_table(q, tie, "Q");

    std::vector<Rat> weights = prior ? output_distribution(p, *prior) : output_distribution(p);

    std::vector<std::vector<Rat>> p_cols(p.outputs()), q_cols(q.outputs());
    for (int j = 0; j < p.outputs(); ++j) {
        p_cols[j] = p.column(j);
        q_cols[j] = q.column(j);
    }

    const std::uint32_t total = (1u << n) - 1;
    std::vector<std::uint64_t> column_agreements(p.outputs(), 0);
    for (std::uint32_t mask = 1; mask <= total; ++mask) {
        Code code(n, mask);
        for (int j = 0; j < p.outputs(); ++j)
            if (ml_decode(p_cols[j], code) == ml_decode(q_cols[j], code)) ++column_agreements[j];
    }

    Rat probability = 0;
    for (int j = 0; j < p.outputs(); ++j)
        probability += Rat(Int(column_agreements[j])) * weights[j];
    return probability / Rat(nonempty_code_count(n));
}

AgreementCount oracle_global_agreement(const Channel& p, const Channel& q, const TieRule& tie,
                                       int limit) {
    require_same_shape(p.inputs(), p.outputs(), q.inputs(), q.outputs());
    const int n = p.inputs();
    require_enumerable(n, limit);
    (void)stable_rank_table(p, tie, "P");
    (void)stable_rank_table(q, tie, "Q");

    std::vector<std::vector<Rat>> p_cols(p.outputs()), q_cols(q.outputs());
    for (int j = 0; j < p.outputs(); ++j) {
        p_cols[j] = p.column(j);
        q_cols[j] = q.column(j);
    }

    const std::uint32_t total = (1u << n) - 1;
    std::uint64_t agreements = 0;
    for (std::uint32_t mask = 1; mask <= total; ++mask) {
        Code code(n, mask);
        bool all = true;
        for (int j = 0; all && j < p.outputs(); ++j)
            all = ml_decode(p_cols[j], code) == ml_decode(q_cols[j], code);
        if (all) ++agreements;
    }
    return AgreementCount{Int(agreements), n};
}

bool oracle_decoding_equivalent(const Matrix& p, const Matrix& q, int limit) {
    require_same_shape(p.rows(), p.cols(), q.rows(), q.cols());
    const int n = p.rows();
    require_enumerable(n, limit);

    const std::uint32_t total = (1u << n) - 1;
    for (int j = 0; j < p.cols(); ++j) {
        std::vector<Rat> p_col = p.column(j);
        std::vector<Rat> q_col = q.column(j);
        for (std::uint32_t mask = 1; mask <= total; ++mask) {
            Code code(n, mask);
            if (!(ml_decode(p_col, code) == ml_decode(q_col, code))) return false;
        }
    }
    return true;
}

Code sample_code(int universe, SplitMix64& rng) {
    if (universe < 1 || universe > kMaskLimit)
        throw Error(ErrorKind::domain, "code universe must have 1.." + std::to_string(kMaskLimit) +
                                           " inputs");
    const std::uint64_t total = (std::uint64_t(1) << universe) - 1;
    return Code(universe, static_cast<std::uint32_t>(rng.between(1, total)));
}

MonteCarloEstimate monte_carlo_radial(const Channel& p, const Channel& q, std::uint64_t samples,
                                      std::uint64_t seed, const TieRule& tie,
                                      const std::optional<std::vector<Rat>>& prior) {
    if (samples == 0) throw ZeroSamples();
    require_same_shape(p.inputs(), p.outputs(), q.inputs(), q.outputs());
    const int n = p.inputs();
    if (n > kMaskLimit) throw TooLarge(n, kMaskLimit);

    auto p_ranks = stable_rank_table(p, tie, "P");
    auto q_ranks = stable_rank_table(q, tie, "Q");

    std::vector<Rat> weights = prior ? output_distribution(p, *prior) : output_distribution(p);

    // Output column j is selected when the 64-bit draw r satisfies
    // r / 2^64 < cumulative_j, i.e. r * den_j < num_j * 2^64 exactly.
    const int m = p.outputs();
    std::vector<Int> cum_num64(m), cum_den(m);
    Rat cumulative = 0;
    for (int j = 0; j < m; ++j) {
        cumulative += weights[j];
        cum_num64[j] = numerator(cumulative) << 64;
        cum_den[j] = denominator(cumulative);
    }

    std::uint64_t agreements = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        SplitMix64 g(SplitMix64::derive(seed, s));
        Code code = sample_code(n, g);
        const Int draw = Int(g.next());
        int column = m - 1;
        for (int j = 0; j < m; ++j) {
            if (draw * cum_den[j] < cum_num64[j]) {
                column = j;
                break;
            }
        }
        if (top_member(code.mask(), p_ranks[column]) == top_member(code.mask(), q_ranks[column]))
            ++agreements;
    }

    MonteCarloEstimate result;
    result.samples = samples;
    result.agreements = agreements;
    result.seed = seed;
    result.estimate = static_cast<double>(agreements) / static_cast<double>(samples);
    result.std_error =
        std::sqrt(result.estimate * (1.0 - result.estimate) / static_cast<double>(samples));
    return result;
}

}  // namespace chanspace
