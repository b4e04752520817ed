#include "chanspace/verify.hpp"

#include "chanspace/channel.hpp"
#include "chanspace/channel_metrics.hpp"
#include "chanspace/errors.hpp"
#include "chanspace/oracle.hpp"
#include "chanspace/parallel.hpp"
#include "chanspace/perm_metrics.hpp"
#include "chanspace/ranking.hpp"
#include "chanspace/rational.hpp"
#include "chanspace/rng.hpp"
#include "chanspace/sampling.hpp"
#include "chanspace/serialize.hpp"
#include "chanspace/weak_order.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <string_view>

namespace chanspace {

namespace {

constexpr size_t kMaxRecordedFailures = 20;

void record_failure(CheckResult& result, const std::string& message) {
    if (result.failures.size() < kMaxRecordedFailures)
        result.failures.push_back(message);
    else if (result.failures.size() == kMaxRecordedFailures)
        result.failures.push_back("... more failures suppressed");
}

std::uint64_t check_stream(std::uint64_t seed, std::string_view check_name) {
    // FNV-1a over the name keeps the per-check streams disjoint.
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : check_name) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return SplitMix64::derive(seed, h);
}

void for_each_ranking(int n, const std::function<void(const Ranking&)>& fn) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
        fn(Ranking::from_rank_order(order));
    } while (std::next_permutation(order.begin(), order.end()));
}

std::vector<Ranking> all_rankings(int n) {
    std::vector<Ranking> out;
    for_each_ranking(n, [&](const Ranking& r) { out.push_back(r); });
    return out;
}

struct SweepPart {
    std::uint64_t instances = 0;
    std::vector<std::string> failures;
};

// Partitions `count` seeded instances across workers; instance k always
// sees the stream derive(stream_seed, k), so the outcome is independent
// of the partitioning.
template <typename Fn>
void run_seeded_sweep(CheckResult& result, std::uint64_t count, std::uint64_t stream_seed,
                      int workers, Fn instance_fn) {
    auto parts = map_chunks<SweepPart>(
        count, workers, [&](std::uint64_t begin, std::uint64_t end) {
            SweepPart part;
            for (std::uint64_t k = begin; k < end; ++k) {
                SplitMix64 rng(SplitMix64::derive(stream_seed, k));
                if (auto message = instance_fn(k, rng); !message.empty())
                    part.failures.push_back(message);
                ++part.instances;
            }
            return part;
        });
    for (const auto& part : parts) {
        result.instances += part.instances;
        for (const auto& f : part.failures) record_failure(result, f);
    }
}

// ---- individual checks ----------------------------------------------

CheckResult check_cone_census() {
    CheckResult result{.check = "cone-census"};
    const Int expected_counts[] = {1, 3, 13, 75, 541};
    Int factorial = 1;
    for (int n = 1; n <= 5; ++n) {
        factorial *= n;
        auto orders = enumerate_weak_orders(n);
        ++result.instances;
        if (Int(orders.size()) != expected_counts[n - 1])
            record_failure(result, "n=" + std::to_string(n) + ": enumerated " +
                                       std::to_string(orders.size()) + " weak orders");
        if (weak_order_count(n) != expected_counts[n - 1])
            record_failure(result, "n=" + std::to_string(n) + ": count formula disagrees");
        Int full = 0;
        for (const auto& w : orders)
            if (w.tie_free()) ++full;
        if (full != factorial)
            record_failure(result, "n=" + std::to_string(n) + ": " + full.str() +
                                       " tie-free orders, expected n!");
    }
    // dimension histogram in three dimensions: 6 cones of dimension 3,
    // 6 of dimension 2, 1 of dimension 1
    std::map<int, int> histogram;
    for (const auto& w : enumerate_weak_orders(3)) ++histogram[cone_dimension(w)];
    ++result.instances;
    if (histogram != std::map<int, int>{{1, 1}, {2, 6}, {3, 6}})
        record_failure(result, "dimension histogram for n=3 is off");
    result.notes.push_back("weak order counts 1,3,13,75,541 and n! tie-free cones confirmed");
    return result;
}

CheckResult check_formula_vs_oracle(const VerifyConfig& config) {
    CheckResult result{.check = "formula-vs-oracle"};
    auto s4 = all_rankings(4);
    for (const auto& sigma : s4) {
        for (const auto& phi : s4) {
            ++result.instances;
            Int formula = agreement_count(sigma, phi).value;
            Int oracle = oracle_agreement_count(sigma, phi).value;
            if (formula != oracle)
                record_failure(result, "n=4 sigma=" + ranking_to_text(sigma) + " phi=" +
                                           ranking_to_text(phi) + ": " + formula.str() +
                                           " vs oracle " + oracle.str());
        }
    }
    std::uint64_t stream = check_stream(config.seed, result.check);
    run_seeded_sweep(result, config.random_pair_count, stream, config.workers,
                     [&](std::uint64_t, SplitMix64& rng) -> std::string {
                         int n = static_cast<int>(rng.between(5, 12));
                         Ranking sigma = random_ranking(n, rng);
                         Ranking phi = random_ranking(n, rng);
                         Int formula = agreement_count(sigma, phi).value;
                         Int oracle = oracle_agreement_count(sigma, phi).value;
                         if (formula != oracle)
                             return "n=" + std::to_string(n) + " sigma=" +
                                    ranking_to_text(sigma) + " phi=" + ranking_to_text(phi) +
                                    ": " + formula.str() + " vs oracle " + oracle.str();
                         return "";
                     });
    return result;
}

CheckResult check_invariance() {
    CheckResult result{.check = "invariance"};
    for (int n = 2; n <= 4; ++n) {
        auto group = all_rankings(n);
        const Int upper = nonempty_code_count(n);
        for (const auto& sigma : group) {
            // symmetry via the inverse
            ++result.instances;
            if (agreement_count(sigma).value != agreement_count(sigma.inverse()).value)
                record_failure(result, "S differs on inverse of " + ranking_to_text(sigma));
            for (const auto& phi : group) {
                ++result.instances;
                Int base = agreement_count(sigma, phi).value;
                if (agreement_count(phi, sigma).value != base)
                    record_failure(result, "asymmetric S at " + ranking_to_text(sigma) + " / " +
                                               ranking_to_text(phi));
                if (base < n || base > upper)
                    record_failure(result, "S out of range at " + ranking_to_text(sigma) + " / " +
                                               ranking_to_text(phi));
                if ((base == upper) != (sigma == phi))
                    record_failure(result, "S attains the maximum away from the diagonal at " +
                                               ranking_to_text(sigma) + " / " +
                                               ranking_to_text(phi));
            }
        }
        // left invariance on the full group
        for (const auto& tau : group)
            for (const auto& sigma : group)
                for (const auto& phi : group) {
                    ++result.instances;
                    if (agreement_count(compose(tau, sigma), compose(tau, phi)).value !=
                        agreement_count(sigma, phi).value)
                        record_failure(result, "left invariance fails at tau=" +
                                                   ranking_to_text(tau) + " sigma=" +
                                                   ranking_to_text(sigma) + " phi=" +
                                                   ranking_to_text(phi));
                }
    }
    return result;
}

CheckResult check_transposition_delta() {
    CheckResult result{.check = "transposition-delta"};
    for (int n = 2; n <= 5; ++n) {
        for_each_ranking(n, [&](const Ranking& sigma) {
            Int s_sigma = agreement_count(sigma).value;
            for (int r = 0; r + 1 < n; ++r) {
                ++result.instances;
                Ranking swapped = compose(adjacent_transposition(n, r), sigma);
                Int direct = agreement_count(swapped).value - s_sigma;
                Int predicted = adjacent_swap_delta(sigma, r);
                if (direct != predicted)
                    record_failure(result, "n=" + std::to_string(n) + " sigma=" +
                                               ranking_to_text(sigma) + " r=" +
                                               std::to_string(r + 1) + ": predicted " +
                                               predicted.str() + ", direct " + direct.str());
                bool ranks_ascending = sigma.ranks()[r] < sigma.ranks()[r + 1];
                if (ranks_ascending != (predicted < 0))
                    record_failure(result, "sign split violated at sigma=" +
                                               ranking_to_text(sigma) + " r=" +
                                               std::to_string(r + 1));
            }
        });
    }
    // exponent of the bare adjacent transposition
    for (int n = 2; n <= 12; ++n) {
        for (int r = 0; r + 1 < n; ++r) {
            ++result.instances;
            int exponent = agreement_exponent(adjacent_transposition(n, r), r);
            if (exponent != n - r - 2)
                record_failure(result, "exponent of the adjacent swap at n=" + std::to_string(n) +
                                           " r=" + std::to_string(r + 1) + " is " +
                                           std::to_string(exponent));
        }
    }
    return result;
}

CheckResult check_kendall_recurrence() {
    CheckResult result{.check = "kendall-recurrence"};
    for (int n = 2; n <= 6; ++n) {
        Ranking id = Ranking::identity(n);
        for_each_ranking(n, [&](const Ranking& sigma) {
            std::uint64_t base = kendall_tau(id, sigma);
            for (int r = 0; r + 1 < n; ++r) {
                ++result.instances;
                std::uint64_t swapped = kendall_tau(id, compose(adjacent_transposition(n, r), sigma));
                long long delta = static_cast<long long>(swapped) - static_cast<long long>(base);
                long long expected = sigma.ranks()[r] < sigma.ranks()[r + 1] ? 1 : -1;
                if (delta != expected)
                    record_failure(result, "n=" + std::to_string(n) + " sigma=" +
                                               ranking_to_text(sigma) + " r=" +
                                               std::to_string(r + 1) + ": delta " +
                                               std::to_string(delta));
            }
        });
    }
    return result;
}

CheckResult check_radial_closed_form(const VerifyConfig& config) {
    CheckResult result{.check = "radial-closed-form"};
    std::uint64_t stream = check_stream(config.seed, result.check);
    run_seeded_sweep(
        result, config.radial_instances, stream, config.workers,
        [&](std::uint64_t k, SplitMix64& rng) -> std::string {
            int n = static_cast<int>(rng.between(2, 8));
            // a one-output channel is all ones, never stable
            int m = static_cast<int>(rng.between(2, 6));
            Channel p = random_stable_channel(n, m, 2520, rng);
            Channel q = (k % 5 == 4) ? cone_preserving_variant(p, rng)
                                     : random_stable_channel(n, m, 2520, rng);

            AgreementReport report = radial_agreement(p, q);
            Rat oracle = oracle_radial_probability(p, q, TieRule(), std::nullopt,
                                                   config.oracle_limit);
            if (report.probability != oracle)
                return "instance " + std::to_string(k) + " (n=" + std::to_string(n) + ", m=" +
                       std::to_string(m) + "): closed form " +
                       fraction_string(report.probability) + " vs enumeration " +
                       fraction_string(oracle);
            if (report.probability + report.distance != 1)
                return "instance " + std::to_string(k) + ": probability and distance do not sum to 1";
            Rat norm_total = std::accumulate(report.column_norms.begin(),
                                             report.column_norms.end(), Rat(0));
            if (norm_total != n)
                return "instance " + std::to_string(k) + ": column norms sum to " +
                       fraction_string(norm_total);
            const Int upper = nonempty_code_count(n);
            for (const Int& s : report.per_column_s)
                if (s < n || s > upper)
                    return "instance " + std::to_string(k) + ": per-column S out of range";
            if (k % 5 == 4 && report.distance != 0)
                return "instance " + std::to_string(k) +
                       ": nonzero distance to a channel in the same cone";
            if (radial_decoding_distance(p, p) != 0)
                return "instance " + std::to_string(k) + ": self distance is nonzero";
            return "";
        });
    return result;
}

CheckResult check_monte_carlo(const VerifyConfig& config) {
    CheckResult result{.check = "monte-carlo"};
    std::uint64_t stream = check_stream(config.seed, result.check);
    run_seeded_sweep(
        result, static_cast<std::uint64_t>(config.mc_pairs), stream, config.workers,
        [&](std::uint64_t k, SplitMix64& rng) -> std::string {
            Channel p = random_stable_channel(4, 4, 840, rng);
            Channel q = random_stable_channel(4, 4, 840, rng);
            Rat closed = radial_agreement_probability(p, q);
            std::uint64_t mc_seed = SplitMix64::derive(stream, 0x4D43ULL + k);
            MonteCarloEstimate mc = monte_carlo_radial(p, q, config.mc_samples, mc_seed);
            double gap = std::abs(mc.estimate - to_double(closed));
            if (mc.std_error == 0.0) {
                if (mc.exact_estimate() != closed)
                    return "pair " + std::to_string(k) +
                           ": degenerate sample disagrees with closed form " +
                           fraction_string(closed);
            } else if (gap > config.mc_sigmas * mc.std_error) {
                return "pair " + std::to_string(k) + ": estimate " +
                       decimal_string(mc.exact_estimate(), 6) + " is " +
                       std::to_string(gap / mc.std_error) + " standard errors from " +
                       fraction_string(closed);
            }
            if (k == 0) {
                MonteCarloEstimate again = monte_carlo_radial(p, q, config.mc_samples, mc_seed);
                if (again.agreements != mc.agreements)
                    return "fixed seed did not reproduce the sample count";
            }
            return "";
        });
    result.notes.push_back("tolerance " + std::to_string(config.mc_sigmas) +
                           " binomial standard errors at " + std::to_string(config.mc_samples) +
                           " samples per pair");
    return result;
}

CheckResult check_equivalence_oracle(const VerifyConfig& config) {
    CheckResult result{.check = "equivalence-oracle"};
    std::uint64_t stream = check_stream(config.seed, result.check);
    run_seeded_sweep(
        result, config.equivalence_instances, stream, config.workers,
        [&](std::uint64_t k, SplitMix64& rng) -> std::string {
            int n = static_cast<int>(rng.between(2, 4));
            // one-output channels are all ones and trivially equivalent;
            // keep a few around as a degenerate case
            int m = (k % 10 == 9) ? 1 : static_cast<int>(rng.between(2, 3));
            bool stable_branch = k % 4 <= 1 && m >= 2;
            Channel p = stable_branch ? random_stable_channel(n, m, 360, rng)
                                      : random_channel(n, m, m + 2, rng);
            Channel q = p;
            if (stable_branch && k % 4 == 0)
                q = cone_preserving_variant(p, rng);
            else if (stable_branch)
                q = random_stable_channel(n, m, 360, rng);
            else
                q = random_channel(n, m, m + 2, rng);

            bool by_ranks = decoding_equivalent(p, q);
            bool by_codes = oracle_decoding_equivalent(p.entries(), q.entries());
            if (by_ranks != by_codes)
                return "instance " + std::to_string(k) + " (n=" + std::to_string(n) + ", m=" +
                       std::to_string(m) + "): weak orders say " +
                       (by_ranks ? "equivalent" : "different") + ", decoder sets say " +
                       (by_codes ? "equivalent" : "different");
            return "";
        });
    return result;
}

CheckResult check_triangle_survey() {
    CheckResult result{.check = "triangle-survey", .informational = true};
    for (int n = 2; n <= 4; ++n) {
        auto group = all_rankings(n);
        std::uint64_t triples = 0, violations = 0;
        Rat worst = 0;
        for (const auto& a : group)
            for (const auto& b : group)
                for (const auto& c : group) {
                    ++triples;
                    Rat direct = decoding_distance(a, c);
                    Rat detour = decoding_distance(a, b) + decoding_distance(b, c);
                    if (direct > detour) {
                        ++violations;
                        worst = std::max(worst, Rat(direct - detour));
                    }
                }
        result.instances += triples;
        std::string note = "n=" + std::to_string(n) + ": " + std::to_string(violations) +
                           " violations in " + std::to_string(triples) + " triples";
        if (violations > 0) note += ", worst excess " + fraction_string(worst);
        result.notes.push_back(note);
    }
    result.notes.push_back("informational survey; the triangle inequality is not asserted");
    return result;
}

// The classic worked example: a numeric 3x3 channel compared against two
// decoding cones. The previously reported per-column counts (7,7,4) and
// (5,7,4) are not what exhaustive enumeration over all 7 codes yields;
// this check recomputes everything from scratch and keeps the qualitative
// conclusion (the one-column change stays closer than the two-column
// change).
CheckResult check_worked_example() {
    CheckResult result{.check = "worked-example"};
    const Rat e8(1, 8), e10(1, 10);
    Channel p = Channel::validated(Matrix::from_rows({{5 * e8, 1 * e8, 2 * e8},
                                                      {2 * e8, 5 * e8, 1 * e8},
                                                      {1 * e8, 2 * e8, 5 * e8}}));
    Channel q = Channel::validated(Matrix::from_rows({{7 * e10, 1 * e10, 2 * e10},
                                                      {2 * e10, 3 * e10, 5 * e10},
                                                      {1 * e10, 2 * e10, 7 * e10}}));
    Channel r = Channel::validated(Matrix::from_rows({{3 * e10, 1 * e10, 6 * e10},
                                                      {6 * e10, 3 * e10, 1 * e10},
                                                      {1 * e10, 2 * e10, 7 * e10}}));

    // representatives must land in the advertised cones
    WeakOrderMatrix expected_q(std::vector<WeakOrder>{
        WeakOrder({1, 2, 3}), WeakOrder({3, 1, 2}), WeakOrder({3, 2, 1})});
    WeakOrderMatrix expected_r(std::vector<WeakOrder>{
        WeakOrder({2, 1, 3}), WeakOrder({3, 1, 2}), WeakOrder({2, 3, 1})});
    ++result.instances;
    if (!(weak_order_matrix(q) == expected_q))
        record_failure(result, "representative for the first cone drifted");
    ++result.instances;
    if (!(weak_order_matrix(r) == expected_r))
        record_failure(result, "representative for the second cone drifted");

    AgreementReport pq = radial_agreement(p, q);
    AgreementReport pr = radial_agreement(p, r);

    ++result.instances;
    Rat oracle_pq = oracle_radial_probability(p, q);
    if (pq.probability != oracle_pq)
        record_failure(result, "closed form vs enumeration differ on (P,Q): " +
                                   fraction_string(pq.probability) + " vs " +
                                   fraction_string(oracle_pq));
    ++result.instances;
    Rat oracle_pr = oracle_radial_probability(p, r);
    if (pr.probability != oracle_pr)
        record_failure(result, "closed form vs enumeration differ on (P,R): " +
                                   fraction_string(pr.probability) + " vs " +
                                   fraction_string(oracle_pr));

    ++result.instances;
    if (!(pq.distance < pr.distance))
        record_failure(result, "expected d(P,Q) < d(P,R), got " + fraction_string(pq.distance) +
                                   " vs " + fraction_string(pr.distance));

    auto s_list = [](const AgreementReport& rep) {
        std::string out = "(";
        for (size_t i = 0; i < rep.per_column_s.size(); ++i)
            out += (i ? "," : "") + rep.per_column_s[i].str();
        return out + ")";
    };
    result.notes.push_back("per-column agreement counts: (P,Q) " + s_list(pq) +
                           ", previously reported (7,7,4)");
    result.notes.push_back("per-column agreement counts: (P,R) " + s_list(pr) +
                           ", previously reported (5,7,4)");
    result.notes.push_back("d(P,Q) = " + fraction_string(pq.distance) + ", d(P,R) = " +
                           fraction_string(pr.distance) +
                           "; previously reported 1/7 and 5/21 (ordering agrees)");

    // unrefined distances of the same cone triple
    Rat d_qp = global_decoding_distance(q, p);
    Rat d_qr = global_decoding_distance(q, r);
    Rat d_pr = global_decoding_distance(p, r);
    result.notes.push_back("pairwise unrefined distances: " + fraction_string(d_qp) + ", " +
                           fraction_string(d_qr) + ", " + fraction_string(d_pr) +
                           "; previously reported as all 4/7");
    ++result.instances;
    if (d_qp != Rat(1, 7) || d_qr != Rat(2, 7) || d_pr != Rat(2, 7))
        record_failure(result, "unrefined distances moved away from the pinned enumeration");
    return result;
}

}  // namespace

std::vector<std::string> available_suites() {
    return {"cone-census",       "formula-vs-oracle", "invariance",
            "transposition-delta", "kendall-recurrence", "radial-closed-form",
            "monte-carlo",       "equivalence-oracle", "triangle-survey",
            "worked-example"};
}

std::vector<CheckResult> run_verification(const std::vector<std::string>& suites,
                                          const VerifyConfig& config) {
    std::vector<std::string> wanted = suites;
    if (wanted.empty() || (wanted.size() == 1 && wanted[0] == "all")) wanted = available_suites();

    auto known = available_suites();
    for (const auto& name : wanted)
        if (std::find(known.begin(), known.end(), name) == known.end())
            throw Error(ErrorKind::domain, "unknown verification suite: " + name);

    std::vector<CheckResult> results;
    for (const auto& name : wanted) {
        if (name == "cone-census") results.push_back(check_cone_census());
        else if (name == "formula-vs-oracle") results.push_back(check_formula_vs_oracle(config));
        else if (name == "invariance") results.push_back(check_invariance());
        else if (name == "transposition-delta") results.push_back(check_transposition_delta());
        else if (name == "kendall-recurrence") results.push_back(check_kendall_recurrence());
        else if (name == "radial-closed-form") results.push_back(check_radial_closed_form(config));
        else if (name == "monte-carlo") results.push_back(check_monte_carlo(config));
        else if (name == "equivalence-oracle") results.push_back(check_equivalence_oracle(config));
        else if (name == "triangle-survey") results.push_back(check_triangle_survey());
        else if (name == "worked-example") results.push_back(check_worked_example());
    }
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed(); });
}

}  // namespace chanspace
