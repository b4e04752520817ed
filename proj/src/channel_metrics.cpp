#include "chanspace/channel_metrics.hpp"

#include "chanspace/errors.hpp"
#include "chanspace/oracle.hpp"
#include "chanspace/perm_metrics.hpp"
#include "chanspace/ranking.hpp"

namespace chanspace {

namespace {

void require_same_shape(const Channel& p, const Channel& q) {
    if (p.inputs() != q.inputs() || p.outputs() != q.outputs())
        throw DimensionMismatch(std::to_string(p.inputs()) + "x" + std::to_string(p.outputs()) +
                                " vs " + std::to_string(q.inputs()) + "x" +
                                std::to_string(q.outputs()));
}

std::vector<Ranking> stable_column_rankings(const Channel& ch, const TieRule& tie,
                                            const std::string& which) {
    std::vector<Ranking> out;
    out.reserve(ch.outputs());
    for (int j = 0; j < ch.outputs(); ++j) {
        WeakOrder order = weak_order_of(ch.column(j), tie);
        if (!order.tie_free()) throw UnstableChannel(which, j);
        out.push_back(order.to_ranking());
    }
    return out;
}

}  // namespace

std::vector<Rat> output_distribution(const Channel& p) {
    std::vector<Rat> out(p.outputs());
    const Rat uniform(1, p.inputs());
    for (int j = 0; j < p.outputs(); ++j) out[j] = p.column_norm(j) * uniform;
    return out;
}

std::vector<Rat> output_distribution(const Channel& p, const std::vector<Rat>& prior) {
    if (static_cast<int>(prior.size()) != p.inputs())
        throw BadPrior("length " + std::to_string(prior.size()) + ", expected " +
                       std::to_string(p.inputs()));
    Rat total = 0;
    for (const Rat& w : prior) {
        if (w < 0) throw BadPrior("negative weight");
        total += w;
    }
    if (total != 1) throw BadPrior("weights sum to " + fraction_string(total) + ", expected 1");

    std::vector<Rat> out(p.outputs());
    for (int j = 0; j < p.outputs(); ++j) {
        Rat acc = 0;
        for (int i = 0; i < p.inputs(); ++i) acc += p.probability(i, j) * prior[i];
        out[j] = acc;
    }
    return out;
}

AgreementReport radial_agreement(const Channel& p, const Channel& q, const TieRule& tie,
                                 const std::optional<std::vector<Rat>>& prior) {
    require_same_shape(p, q);
    auto p_rankings = stable_column_rankings(p, tie, "P");
    auto q_rankings = stable_column_rankings(q, tie, "Q");

    AgreementReport report;
    report.inputs = p.inputs();
    report.uniform_prior = !prior.has_value();
    report.output_weights = prior ? output_distribution(p, *prior) : output_distribution(p);

    const Int denominator = nonempty_code_count(p.inputs());
    Rat probability = 0;
    for (int j = 0; j < p.outputs(); ++j) {
        AgreementCount s = agreement_count(p_rankings[j], q_rankings[j]);
        probability += Rat(s.value) * report.output_weights[j];
        report.per_column_s.push_back(std::move(s.value));
        report.column_norms.push_back(p.column_norm(j));
    }
    report.probability = probability / Rat(denominator);
    report.distance = 1 - report.probability;
    return report;
}

Rat radial_agreement_probability(const Channel& p, const Channel& q, const TieRule& tie,
                                 const std::optional<std::vector<Rat>>& prior) {
    return radial_agreement(p, q, tie, prior).probability;
}

Rat radial_decoding_distance(const Channel& p, const Channel& q, const TieRule& tie,
                             const std::optional<std::vector<Rat>>& prior) {
    return radial_agreement(p, q, tie, prior).distance;
}

Rat global_decoding_distance(const Channel& p, const Channel& q, const TieRule& tie, int limit) {
    AgreementCount agreement = oracle_global_agreement(p, q, tie, limit);
    return 1 - agreement.probability();
}

}  // namespace chanspace
