#include "ancensus/store.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ancensus {

using nlohmann::json;

std::string format_sig6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

namespace {

std::string now_iso8601() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

std::string compute_run_id(const std::string& subcommand, const json& config) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    h = fnv1a(h, subcommand);
    h = fnv1a(h, config.dump());  // nlohmann objects serialize with sorted keys
    h = fnv1a(h, kVersion);
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

RunRecord make_record(const std::string& subcommand, const json& config,
                      const json& payload_rows, const json& diagnostics) {
    RunRecord r;
    r.subcommand = subcommand;
    r.config_json = config.dump();
    r.run_id = compute_run_id(subcommand, config);
    r.started_at = now_iso8601();
    r.finished_at = r.started_at;
    json payload;
    payload["rows"] = payload_rows.is_array() ? payload_rows : json::array({payload_rows});
    r.payload_json = payload.dump();
    r.diagnostics_json = diagnostics.dump();
    return r;
}

std::string default_store_path() {
    if (const char* env = std::getenv("AN_CENSUS_STORE"); env && *env) return env;
    return "ancensus_store.jsonl";
}

void store_append(const RunRecord& record, const std::string& path) {
    std::ofstream out(path, std::ios::app | std::ios::binary);
    if (!out) throw std::runtime_error("store path not writable: " + path);
    json line;
    line["run_id"] = record.run_id;
    line["subcommand"] = record.subcommand;
    line["version"] = kVersion;
    line["config"] = json::parse(record.config_json);
    line["started_at"] = record.started_at;
    line["finished_at"] = record.finished_at;
    line["payload"] = json::parse(record.payload_json);
    line["diagnostics"] = json::parse(record.diagnostics_json);
    out << line.dump() << "\n";
    if (!out) throw std::runtime_error("store write failed: " + path);
}

std::vector<RunRecord> store_load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("store path not readable: " + path);
    std::vector<RunRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json obj = json::parse(line);
        RunRecord r;
        r.run_id = obj.value("run_id", "");
        r.subcommand = obj.value("subcommand", "");
        r.config_json = obj.contains("config") ? obj["config"].dump() : "{}";
        r.started_at = obj.value("started_at", "");
        r.finished_at = obj.value("finished_at", "");
        r.payload_json = obj.contains("payload") ? obj["payload"].dump() : "{}";
        r.diagnostics_json = obj.contains("diagnostics") ? obj["diagnostics"].dump() : "{}";
        records.push_back(std::move(r));
    }
    return records;
}

std::string export_csv(const std::vector<RunRecord>& records) {
    static const char* kColumns[] = {"run_id", "subcommand", "n",     "x",
                                     "points_on_r", "an_polys", "fields", "unknown_verdicts",
                                     "count", "slope", "c", "h", "exponent", "bound_log10"};
    std::string out;
    for (size_t i = 0; i < std::size(kColumns); ++i) {
        if (i) out += ',';
        out += kColumns[i];
    }
    out += '\n';
    for (const RunRecord& rec : records) {
        json payload = json::parse(rec.payload_json);
        const json rows = payload.value("rows", json::array());
        for (const json& row : rows) {
            for (size_t i = 0; i < std::size(kColumns); ++i) {
                if (i) out += ',';
                const std::string col = kColumns[i];
                if (col == "run_id") {
                    out += rec.run_id;
                } else if (col == "subcommand") {
                    out += rec.subcommand;
                } else if (row.contains(col)) {
                    const json& v = row[col];
                    if (v.is_number_float()) {
                        out += format_sig6(v.get<double>());
                    } else if (v.is_string()) {
                        out += v.get<std::string>();
                    } else {
                        out += v.dump();
                    }
                }
            }
            out += '\n';
        }
    }
    return out;
}

}  // namespace ancensus
