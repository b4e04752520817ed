// channel-space: decoding geometry of discrete memoryless channels.
//
// Subcommands: order, dist-perm, dist-channel, cones, verify, simulate.
// Exit codes: 0 success, 1 domain error, 2 verification failure,
// 3 parse error.

#include "chanspace/channel.hpp"
#include "chanspace/channel_metrics.hpp"
#include "chanspace/errors.hpp"
#include "chanspace/oracle.hpp"
#include "chanspace/perm_metrics.hpp"
#include "chanspace/ranking.hpp"
#include "chanspace/serialize.hpp"
#include "chanspace/verify.hpp"
#include "chanspace/weak_order.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace {

using namespace chanspace;

struct CommonOptions {
    std::string tie_rule = "exact";
    std::string epsilon = "0";
    std::string prior = "uniform";
    std::uint64_t seed = 1729;
    int workers = 1;
    std::string format = "table";
    int oracle_limit = kMaxEnumerationSize;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("CHANNEL_SPACE_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ParseError("CHANNEL_SPACE_SEED is not an unsigned integer");
        }
    }
    return 1729;
}

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--tie-rule", opts.tie_rule, "Tie detection: exact or epsilon")
        ->check(CLI::IsMember({"exact", "epsilon"}))
        ->capture_default_str();
    cmd->add_option("--epsilon", opts.epsilon, "Tie tolerance for --tie-rule epsilon");
    cmd->add_option("--prior", opts.prior,
                    "Input prior: uniform or comma-separated weights summing to 1");
    cmd->add_option("--seed", opts.seed, "Seed for randomized work")->capture_default_str();
    cmd->add_option("--workers", opts.workers,
                    "Worker threads for sweeps (0 = hardware); never affects results")
        ->capture_default_str();
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    cmd->add_option("--oracle-limit", opts.oracle_limit,
                    "Largest input count accepted by exhaustive enumeration")
        ->capture_default_str();
}

TieRule tie_rule_of(const CommonOptions& opts) {
    if (opts.tie_rule == "epsilon") return TieRule::epsilon(parse_rational(opts.epsilon));
    return TieRule::exact();
}

std::optional<std::vector<Rat>> prior_of(const CommonOptions& opts) {
    if (opts.prior == "uniform") return std::nullopt;
    std::vector<Rat> weights;
    size_t start = 0;
    const std::string& text = opts.prior;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        weights.push_back(parse_rational(
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return weights;
}

void emit(const Json& payload, const CommonOptions& opts) {
    if (opts.format == "json")
        std::cout << payload.dump(2) << "\n";
}

// ---- order ------------------------------------------------------------

int run_order(const std::string& file, const CommonOptions& opts) {
    Matrix grid = load_matrix(file);
    require_non_negative(grid);
    TieRule tie = tie_rule_of(opts);
    WeakOrderMatrix wom = weak_order_matrix(grid, tie);

    Json payload = weak_order_matrix_to_json(wom);
    payload["n"] = grid.rows();
    payload["m"] = grid.cols();
    Json dims = Json::array(), stable_flags = Json::array();
    bool overall = true;
    for (const WeakOrder& col : wom.columns()) {
        dims.push_back(cone_dimension(col));
        stable_flags.push_back(col.tie_free());
        overall = overall && col.tie_free();
    }
    payload["dimensions"] = std::move(dims);
    payload["stable_columns"] = std::move(stable_flags);
    payload["stable"] = overall;
    payload["convention"] = kRankConvention;

    if (opts.format == "table") {
        std::cout << "weak order matrix (" << grid.rows() << " inputs, " << grid.cols()
                  << " outputs, rank 1 = most likely)\n";
        for (int j = 0; j < wom.outputs(); ++j) {
            const WeakOrder& col = wom.column(j);
            std::cout << "column " << (j + 1) << ": ranks";
            for (int rank : col.ranks()) std::cout << " " << rank;
            std::cout << "  dimension " << cone_dimension(col)
                      << (col.tie_free() ? "  stable" : "  tied") << "\n";
        }
        std::cout << (overall ? "channel is stable\n" : "channel is unstable\n");
    }
    emit(payload, opts);
    return 0;
}

// ---- dist-perm ----------------------------------------------------------

int run_dist_perm(const std::string& sigma_text, const std::string& phi_text, bool with_oracle,
                  const CommonOptions& opts) {
    Ranking sigma = ranking_from_text(sigma_text);
    Ranking phi = ranking_from_text(phi_text);

    AgreementCount s = agreement_count(sigma, phi);
    Rat probability = s.probability();
    Rat distance = 1 - probability;
    std::uint64_t tau = kendall_tau(sigma, phi);

    Json payload;
    payload["n"] = sigma.size();
    payload["sigma"] = ranking_to_json(sigma);
    payload["phi"] = ranking_to_json(phi);
    payload["s"] = int_to_json(s.value);
    payload["probability"] = fraction_string(probability);
    payload["distance"] = fraction_string(distance);
    payload["kendall_tau"] = tau;

    if (with_oracle) {
        AgreementCount oracle = oracle_agreement_count(sigma, phi, opts.oracle_limit);
        payload["oracle_s"] = int_to_json(oracle.value);
        if (oracle.value != s.value)
            throw OracleMismatch("agreement count " + s.value.str() + " vs enumerated " +
                                 oracle.value.str());
    }

    if (opts.format == "table") {
        std::cout << "sigma: " << ranking_to_text(sigma) << "  (ranks";
        for (int v : sigma.ranks()) std::cout << " " << (v + 1);
        std::cout << ")\nphi:   " << ranking_to_text(phi) << "  (ranks";
        for (int v : phi.ranks()) std::cout << " " << (v + 1);
        std::cout << ")\n";
        std::cout << "agreement count S = " << s.value.str() << " of "
                  << nonempty_code_count(s.n).str() << " codes\n";
        std::cout << "agreement probability = " << fraction_string(probability) << "\n";
        std::cout << "decoding distance     = " << fraction_string(distance) << "\n";
        std::cout << "kendall tau           = " << tau << "\n";
        if (with_oracle) std::cout << "oracle agreement count matches\n";
    }
    emit(payload, opts);
    return 0;
}

// ---- dist-channel ---------------------------------------------------------

int run_dist_channel(const std::string& p_file, const std::string& q_file, bool with_oracle,
                     bool with_global, bool normalize, const CommonOptions& opts) {
    ChannelOptions copts;
    copts.normalize_rows = normalize;
    Channel p = load_channel(p_file, copts);
    Channel q = load_channel(q_file, copts);
    TieRule tie = tie_rule_of(opts);
    auto prior = prior_of(opts);

    AgreementReport report = radial_agreement(p, q, tie, prior);
    Json payload = agreement_report_to_json(report, prior);

    if (with_oracle) {
        Rat oracle = oracle_radial_probability(p, q, tie, prior, opts.oracle_limit);
        payload["oracle_probability"] = fraction_string(oracle);
        if (oracle != report.probability)
            throw OracleMismatch("radial probability " + fraction_string(report.probability) +
                                 " vs enumerated " + fraction_string(oracle));
    }
    if (with_global) {
        Rat global = global_decoding_distance(p, q, tie, opts.oracle_limit);
        payload["global_distance"] = fraction_string(global);
    }

    if (opts.format == "table") {
        std::cout << "radial agreement, true channel = " << p_file << "\n";
        for (size_t j = 0; j < report.per_column_s.size(); ++j)
            std::cout << "column " << (j + 1) << ": S = " << report.per_column_s[j].str()
                      << "  norm = " << fraction_string(report.column_norms[j])
                      << "  weight = " << fraction_string(report.output_weights[j]) << "\n";
        std::cout << "agreement probability = " << fraction_string(report.probability) << "\n";
        std::cout << "radial distance       = " << fraction_string(report.distance) << "\n";
        if (with_global)
            std::cout << "global distance       = " << payload["global_distance"].get<std::string>()
                      << "\n";
        if (with_oracle) std::cout << "oracle probability matches\n";
    }
    emit(payload, opts);
    return 0;
}

// ---- cones -----------------------------------------------------------------

int run_cones(int n, int limit, const CommonOptions& opts) {
    auto orders = enumerate_weak_orders(n, limit);

    std::map<int, int> by_dimension;
    for (const auto& w : orders) ++by_dimension[cone_dimension(w)];

    Json payload;
    payload["n"] = n;
    payload["total"] = orders.size();
    payload["expected_total"] = int_to_json(weak_order_count(n));
    Json dims = Json::object();
    for (auto it = by_dimension.rbegin(); it != by_dimension.rend(); ++it)
        dims[std::to_string(it->first)] = it->second;
    payload["by_dimension"] = std::move(dims);
    Json list = Json::array();
    for (const auto& w : orders) {
        Json entry;
        entry["ranks"] = w.ranks();
        entry["dimension"] = cone_dimension(w);
        list.push_back(std::move(entry));
    }
    payload["cones"] = std::move(list);

    if (opts.format == "table") {
        std::cout << orders.size() << " decoding cones in dimension " << n << "\n";
        for (auto it = by_dimension.rbegin(); it != by_dimension.rend(); ++it)
            std::cout << "  " << it->second << " of dimension " << it->first << "\n";
        for (const auto& w : orders) {
            std::cout << "ranks";
            for (int r : w.ranks()) std::cout << " " << r;
            std::cout << "  (dimension " << cone_dimension(w) << ")\n";
        }
    }
    emit(payload, opts);
    return 0;
}

// ---- verify ------------------------------------------------------------------

int run_verify(std::vector<std::string> suites, const CommonOptions& opts, bool list_only) {
    if (list_only) {
        for (const auto& name : available_suites()) std::cout << name << "\n";
        return 0;
    }
    VerifyConfig config;
    config.seed = opts.seed;
    config.workers = opts.workers;
    config.oracle_limit = opts.oracle_limit;

    auto results = run_verification(suites, config);

    Json checks = Json::array();
    for (const auto& result : results) {
        Json entry;
        entry["check"] = result.check;
        entry["instances"] = result.instances;
        entry["failures"] = result.failures;
        entry["seed"] = config.seed;
        if (result.informational) entry["informational"] = true;
        if (!result.notes.empty()) entry["notes"] = result.notes;
        checks.push_back(std::move(entry));
    }
    Json payload;
    payload["seed"] = config.seed;
    payload["generator"] = SplitMix64::kAlgorithm;
    payload["checks"] = std::move(checks);
    payload["passed"] = all_passed(results);

    if (opts.format == "table") {
        for (const auto& result : results) {
            const char* status = result.failures.empty() ? "pass" : "FAIL";
            if (result.informational) status = "info";
            std::cout << status << "  " << result.check << "  (" << result.instances
                      << " instances)\n";
            for (const auto& note : result.notes) std::cout << "      " << note << "\n";
            for (const auto& failure : result.failures) std::cout << "      ! " << failure << "\n";
        }
        std::cout << (all_passed(results) ? "all checks passed\n" : "THERE WERE FAILURES\n");
    }
    emit(payload, opts);
    return all_passed(results) ? 0 : 2;
}

// ---- simulate -------------------------------------------------------------------

int run_simulate(const std::string& p_file, const std::string& q_file, std::uint64_t samples,
                 const CommonOptions& opts) {
    Channel p = load_channel(p_file);
    Channel q = load_channel(q_file);
    TieRule tie = tie_rule_of(opts);
    auto prior = prior_of(opts);

    MonteCarloEstimate mc = monte_carlo_radial(p, q, samples, opts.seed, tie, prior);
    Rat closed = radial_agreement_probability(p, q, tie, prior);

    Json payload = monte_carlo_to_json(mc);
    payload["closed_form"] = fraction_string(closed);
    double gap = mc.estimate - to_double(closed);
    char z[32];
    std::snprintf(z, sizeof(z), "%.3f", mc.std_error > 0 ? gap / mc.std_error : 0.0);
    payload["z_score"] = z;

    if (opts.format == "table") {
        std::cout << "samples    = " << mc.samples << " (seed " << mc.seed << ", "
                  << mc.generator << ")\n";
        std::cout << "agreements = " << mc.agreements << "\n";
        std::cout << "estimate   = " << decimal_string(mc.exact_estimate(), 9) << "\n";
        std::cout << "std error  = " << payload["std_error"].get<std::string>() << "\n";
        std::cout << "closed     = " << fraction_string(closed) << "  (z = " << z << ")\n";
    }
    emit(payload, opts);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decoding geometry of discrete memoryless channels"};
    app.require_subcommand(1);

    CommonOptions opts;
    try {
        opts.seed = default_seed();
    } catch (const chanspace::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    }

    // order
    std::string order_file;
    auto* order_cmd =
        app.add_subcommand("order", "Weak order matrix, cone dimensions, stability");
    order_cmd->add_option("file", order_file, "Channel or non-negative grid (.json/.csv)")
        ->required();
    add_common(order_cmd, opts);

    // dist-perm
    std::string sigma_text, phi_text;
    bool perm_oracle = false;
    auto* perm_cmd = app.add_subcommand(
        "dist-perm", "Agreement count, probability, decoding distance, Kendall tau");
    perm_cmd->add_option("sigma", sigma_text, "First ranking, e.g. 3,1,2 (most likely first)")
        ->required();
    perm_cmd->add_option("phi", phi_text, "Second ranking")->required();
    perm_cmd->add_flag("--oracle", perm_oracle, "Re-count by exhaustive enumeration");
    add_common(perm_cmd, opts);

    // dist-channel
    std::string p_file, q_file;
    bool chan_oracle = false, chan_global = false, chan_normalize = false;
    auto* chan_cmd =
        app.add_subcommand("dist-channel", "Radial decoding distance between two channels");
    chan_cmd->add_option("true-channel", p_file, "The channel actually in use")->required();
    chan_cmd->add_option("other-channel", q_file, "The channel whose decoders are borrowed")
        ->required();
    chan_cmd->add_flag("--oracle", chan_oracle, "Cross-check by exhaustive enumeration");
    chan_cmd->add_flag("--global", chan_global, "Also report the unrefined distance");
    chan_cmd->add_flag("--normalize", chan_normalize, "Rescale rows to sum 1 before validating");
    add_common(chan_cmd, opts);

    // cones
    int cones_n = 3;
    int cones_limit = kWeakOrderEnumerationLimit;
    auto* cones_cmd = app.add_subcommand("cones", "Enumerate decoding cones by weak order");
    cones_cmd->add_option("n", cones_n, "Number of inputs")->required();
    cones_cmd->add_option("--limit", cones_limit, "Enumeration size cap")->capture_default_str();
    add_common(cones_cmd, opts);

    // verify
    std::vector<std::string> suites;
    bool list_suites = false;
    auto* verify_cmd = app.add_subcommand("verify", "Run the verification campaign");
    verify_cmd->add_option("--suite", suites, "Suites to run (default: all)");
    verify_cmd->add_flag("--list", list_suites, "List suites and exit");
    add_common(verify_cmd, opts);

    // simulate
    std::string sim_p, sim_q;
    std::uint64_t sim_samples = 100000;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo radial agreement estimate");
    sim_cmd->add_option("true-channel", sim_p, "The channel actually in use")->required();
    sim_cmd->add_option("other-channel", sim_q, "The mismatched channel")->required();
    sim_cmd->add_option("--samples", sim_samples, "Number of samples")->capture_default_str();
    add_common(sim_cmd, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    try {
        if (order_cmd->parsed()) return run_order(order_file, opts);
        if (perm_cmd->parsed()) return run_dist_perm(sigma_text, phi_text, perm_oracle, opts);
        if (chan_cmd->parsed())
            return run_dist_channel(p_file, q_file, chan_oracle, chan_global, chan_normalize,
                                    opts);
        if (cones_cmd->parsed()) return run_cones(cones_n, cones_limit, opts);
        if (verify_cmd->parsed()) return run_verify(suites, opts, list_suites);
        if (sim_cmd->parsed()) return run_simulate(sim_p, sim_q, sim_samples, opts);
    } catch (const chanspace::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
