#pragma once

#include "chanspace/channel.hpp"
#include "chanspace/channel_metrics.hpp"
#include "chanspace/oracle.hpp"
#include "chanspace/ranking.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>

namespace chanspace {

// Convention string recorded in every serialized ranking and report.
inline constexpr const char* kRankConvention = "rank1=most-likely";

using Json = nlohmann::ordered_json;

// Channel / grid files.
//
// JSON: {"n": rows, "m": cols, "entries": [[entry, ...], ...]} where an
// entry is a number or a string like "5/8" or "0.25". CSV: one row per
// line, comma separated, same entry grammar, '#' lines ignored.
// Numbers written by this module are always fraction strings, so a file
// round-trips to an entrywise-identical matrix.
Matrix matrix_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_csv(const std::string& text);

// Dispatches on extension: ".json" or ".csv" (anything else: contents
// starting with '{' parse as JSON, otherwise CSV).
Matrix load_matrix(const std::filesystem::path& path);
Channel load_channel(const std::filesystem::path& path, const ChannelOptions& options = {});
void save_matrix_json(const Matrix& m, const std::filesystem::path& path);

// Weak order matrices: {"columns": [[rank, ...], ...]}, 1-based ranks.
Json weak_order_matrix_to_json(const WeakOrderMatrix& wom);
WeakOrderMatrix weak_order_matrix_from_json(const Json& j);

// Rankings on the command line and in reports: 1-based inputs in rank
// order, most likely first ("3,1,2" = input 3 decoded first).
Ranking ranking_from_text(const std::string& text);
std::string ranking_to_text(const Ranking& r);
Json ranking_to_json(const Ranking& r);

Json agreement_report_to_json(const AgreementReport& report,
                              const std::optional<std::vector<Rat>>& prior = std::nullopt);
Json monte_carlo_to_json(const MonteCarloEstimate& mc);

// Ints that fit a 64-bit signed value serialize as JSON numbers, larger
// ones as decimal strings.
Json int_to_json(const Int& value);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace chanspace
