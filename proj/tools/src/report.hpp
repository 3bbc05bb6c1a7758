#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace wcauchy::cli {

using nlohmann::json;

/// One checked quantity. JSON is the canonical form; csv and table render
/// the per-command Table instead.
struct Record {
    std::string operation;
    json inputs = json::object();
    json value;
    json oracle_value;  // null when there is no independent reference
    std::optional<double> rel_error;
    bool pass = true;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Report {
    std::string command;
    std::uint64_t seed = 0;
    json config = json::object();
    std::vector<Record> records;
    Table table;

    bool pass() const;
    void add(Record r) { records.push_back(std::move(r)); }
};

enum class Format { json, csv, table };

std::string render(const Report& report, Format format);

/// Shortest round-trip decimal form, so output is byte-stable.
std::string num(double v);
json num_or_null(std::optional<double> v);
json complex_json(double re, double im);

/// |value - oracle| / |oracle|, or the absolute gap when the oracle is 0.
double relative_gap(double value, double oracle);

}  // namespace wcauchy::cli
