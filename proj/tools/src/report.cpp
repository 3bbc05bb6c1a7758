#include "report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace wcauchy::cli {

bool Report::pass() const {
    return std::all_of(records.begin(), records.end(), [](const Record& r) { return r.pass; });
}

std::string num(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

json num_or_null(std::optional<double> v) {
    if (!v || !std::isfinite(*v)) return nullptr;
    return *v;
}

json complex_json(double re, double im) { return json::array({re, im}); }

double relative_gap(double value, double oracle) {
    const double gap = std::abs(value - oracle);
    return oracle == 0.0 ? gap : gap / std::abs(oracle);
}

namespace {

json record_json(const Record& r) {
    return json{{"operation", r.operation},
                {"inputs", r.inputs},
                {"value", r.value},
                {"oracle_value", r.oracle_value},
                {"rel_error", num_or_null(r.rel_error)},
                {"pass", r.pass}};
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string render(const Report& report, Format format) {
    std::ostringstream out;
    switch (format) {
    case Format::json: {
        json j{{"command", report.command},
               {"seed", report.seed},
               {"config", report.config},
               {"records", json::array()},
               {"pass", report.pass()}};
        for (const auto& r : report.records) j["records"].push_back(record_json(r));
        out << j.dump(2) << '\n';
        break;
    }
    case Format::csv: {
        const auto& t = report.table;
        for (std::size_t i = 0; i < t.header.size(); ++i) out << (i ? "," : "") << csv_cell(t.header[i]);
        out << '\n';
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
            out << '\n';
        }
        break;
    }
    case Format::table: {
        const auto& t = report.table;
        std::vector<std::size_t> width(t.header.size());
        for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
        for (const auto& row : t.rows)
            for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
                width[i] = std::max(width[i], row[i].size());
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                out << (i ? "  " : "") << cells[i];
                if (i + 1 < cells.size()) out << std::string(width[i] - cells[i].size(), ' ');
            }
            out << '\n';
        };
        out << report.command << " (seed " << report.seed << ")\n";
        line(t.header);
        for (const auto& row : t.rows) line(row);
        out << (report.pass() ? "PASS" : "FAIL") << '\n';
        break;
    }
    }
    return out.str();
}

}  // namespace wcauchy::cli
