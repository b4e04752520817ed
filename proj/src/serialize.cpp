#include "chanspace/serialize.hpp"

#include "chanspace/errors.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace chanspace {

namespace {

Rat entry_from_json(const Json& cell) {
    if (cell.is_string()) return parse_rational(cell.get<std::string>());
    if (cell.is_number_integer() || cell.is_number_unsigned() || cell.is_number_float()) {
        // dump() re-renders the number with shortest round-trip text, so a
        // file containing 0.7 is read as the decimal 7/10.
        return parse_rational(cell.dump());
    }
    throw ParseError("matrix entry must be a number or a string, got " + cell.dump());
}

}  // namespace

Matrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("entries"))
        throw ParseError("expected an object with an \"entries\" array");
    const Json& entries = j.at("entries");
    if (!entries.is_array() || entries.empty())
        throw ParseError("\"entries\" must be a nonempty array of rows");

    std::vector<std::vector<Rat>> rows;
    rows.reserve(entries.size());
    for (const Json& row : entries) {
        if (!row.is_array() || row.empty())
            throw ParseError("each row must be a nonempty array");
        std::vector<Rat> cells;
        cells.reserve(row.size());
        for (const Json& cell : row) cells.push_back(entry_from_json(cell));
        rows.push_back(std::move(cells));
    }

    Matrix m = [&] {
        try {
            return Matrix::from_rows(std::move(rows));
        } catch (const Error& e) {
            throw ParseError(e.what());
        }
    }();
    if (j.contains("n") && j.at("n").get<int>() != m.rows())
        throw ParseError("\"n\" = " + j.at("n").dump() + " does not match " +
                         std::to_string(m.rows()) + " entry rows");
    if (j.contains("m") && j.at("m").get<int>() != m.cols())
        throw ParseError("\"m\" = " + j.at("m").dump() + " does not match " +
                         std::to_string(m.cols()) + " entry columns");
    return m;
}

Json matrix_to_json(const Matrix& m) {
    Json entries = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(fraction_string(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    Json out;
    out["n"] = m.rows();
    out["m"] = m.cols();
    out["entries"] = std::move(entries);
    return out;
}

Matrix matrix_from_csv(const std::string& text) {
    std::vector<std::vector<Rat>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view view(line);
        while (!view.empty() && std::isspace(static_cast<unsigned char>(view.front())))
            view.remove_prefix(1);
        if (view.empty() || view.front() == '#') continue;

        std::vector<Rat> cells;
        size_t start = 0;
        const std::string body(view);
        while (true) {
            size_t comma = body.find(',', start);
            std::string field = body.substr(start, comma == std::string::npos ? std::string::npos
                                                                              : comma - start);
            cells.push_back(parse_rational(field));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(cells));
    }
    if (rows.empty()) throw ParseError("CSV contains no data rows");
    try {
        return Matrix::from_rows(std::move(rows));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::domain, "cannot write " + path.string());
    out << text;
}

Matrix load_matrix(const std::filesystem::path& path) {
    std::string text = read_text_file(path);
    std::string ext = path.extension().string();
    bool looks_json = ext == ".json";
    if (ext != ".json" && ext != ".csv") {
        size_t first = text.find_first_not_of(" \t\r\n");
        looks_json = first != std::string::npos && text[first] == '{';
    }
    if (looks_json) {
        Json j = Json::parse(text, nullptr, false);
        if (j.is_discarded()) throw ParseError("invalid JSON in " + path.string());
        try {
            return matrix_from_json(j);
        } catch (const Json::exception& e) {
            throw ParseError(std::string(e.what()) + " in " + path.string());
        }
    }
    return matrix_from_csv(text);
}

Channel load_channel(const std::filesystem::path& path, const ChannelOptions& options) {
    return Channel::validated(load_matrix(path), options);
}

void save_matrix_json(const Matrix& m, const std::filesystem::path& path) {
    write_text_file(path, matrix_to_json(m).dump(2) + "\n");
}

Json weak_order_matrix_to_json(const WeakOrderMatrix& wom) {
    Json columns = Json::array();
    for (const WeakOrder& column : wom.columns()) columns.push_back(column.ranks());
    Json out;
    out["columns"] = std::move(columns);
    return out;
}

WeakOrderMatrix weak_order_matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("columns") || !j.at("columns").is_array())
        throw ParseError("expected an object with a \"columns\" array");
    std::vector<WeakOrder> columns;
    for (const Json& col : j.at("columns")) {
        if (!col.is_array()) throw ParseError("each column must be an array of ranks");
        std::vector<int> ranks;
        for (const Json& r : col) ranks.push_back(r.get<int>());
        try {
            columns.emplace_back(std::move(ranks));
        } catch (const Error& e) {
            throw ParseError(e.what());
        }
    }
    try {
        return WeakOrderMatrix(std::move(columns));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

Ranking ranking_from_text(const std::string& text) {
    std::vector<int> order;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string field =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            size_t used = 0;
            int value = std::stoi(field, &used);
            while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used])))
                ++used;
            if (used != field.size()) throw std::invalid_argument(field);
            order.push_back(value - 1);  // 1-based on the wire
        } catch (const std::exception&) {
            throw ParseError("ranking entry '" + field + "' is not an integer");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    try {
        return Ranking::from_rank_order(std::move(order));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

std::string ranking_to_text(const Ranking& r) {
    std::string out;
    for (int k = 0; k < r.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(r.rank_order()[k] + 1);
    }
    return out;
}

Json ranking_to_json(const Ranking& r) {
    Json out;
    Json order = Json::array();
    for (int v : r.rank_order()) order.push_back(v + 1);
    Json ranks = Json::array();
    for (int v : r.ranks()) ranks.push_back(v + 1);
    out["rank_order"] = std::move(order);
    out["ranks"] = std::move(ranks);
    out["convention"] = kRankConvention;
    return out;
}

Json int_to_json(const Int& value) {
    static const Int kMax = Int(std::numeric_limits<std::int64_t>::max());
    static const Int kMin = Int(std::numeric_limits<std::int64_t>::min());
    if (value >= kMin && value <= kMax) return Json(value.convert_to<std::int64_t>());
    return Json(value.str());
}

Json agreement_report_to_json(const AgreementReport& report,
                              const std::optional<std::vector<Rat>>& prior) {
    Json out;
    Json s = Json::array();
    for (const Int& v : report.per_column_s) s.push_back(int_to_json(v));
    Json norms = Json::array();
    for (const Rat& v : report.column_norms) norms.push_back(fraction_string(v));
    out["per_column_s"] = std::move(s);
    out["column_norms"] = std::move(norms);
    out["probability"] = fraction_string(report.probability);
    out["distance"] = fraction_string(report.distance);
    out["convention"] = kRankConvention;
    if (report.uniform_prior || !prior) {
        out["prior"] = "uniform";
    } else {
        Json p = Json::array();
        for (const Rat& v : *prior) p.push_back(fraction_string(v));
        out["prior"] = std::move(p);
    }
    return out;
}

Json monte_carlo_to_json(const MonteCarloEstimate& mc) {
    Json out;
    out["generator"] = mc.generator;
    out["seed"] = mc.seed;
    out["samples"] = mc.samples;
    out["agreements"] = mc.agreements;
    out["estimate"] = decimal_string(mc.exact_estimate(), 9);
    char se[32];
    std::snprintf(se, sizeof(se), "%.6e", mc.std_error);
    out["std_error"] = se;
    return out;
}

}  // namespace chanspace
