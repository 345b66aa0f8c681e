#ifndef ANCENSUS_STORE_HPP
#define ANCENSUS_STORE_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace ancensus {

inline constexpr const char* kVersion = "0.1.0";

/// Fixed 6-significant-digit formatting for reproducible tables.
std::string format_sig6(double v);

struct RunRecord {
    std::string run_id;  // deterministic hash of subcommand + config + version
    std::string subcommand;
    std::string config_json;       // canonical (sorted-key) dump
    std::string started_at;        // ISO 8601 UTC; excluded from run_id
    std::string finished_at;
    std::string payload_json;      // {"rows": [flat objects]}
    std::string diagnostics_json;  // flat object of tallies
};

/// FNV-1a hash over subcommand, canonical config, and version, as 16 hex
/// digits. Timestamps never participate, so re-runs collide intentionally.
std::string compute_run_id(const std::string& subcommand, const nlohmann::json& config);

RunRecord make_record(const std::string& subcommand, const nlohmann::json& config,
                      const nlohmann::json& payload_rows, const nlohmann::json& diagnostics);

/// AN_CENSUS_STORE environment override, else "ancensus_store.jsonl".
std::string default_store_path();

/// Appends one record as a single JSON line (UTF-8, LF).
void store_append(const RunRecord& record, const std::string& path);

std::vector<RunRecord> store_load(const std::string& path);

/// CSV with the fixed column order
/// run_id,subcommand,n,x,points_on_r,an_polys,fields,unknown_verdicts,
/// count,slope,c,h,exponent,bound_log10 — one row per payload row, blank
/// cells for absent fields. Deterministic: re-export is byte-identical.
std::string export_csv(const std::vector<RunRecord>& records);

}  // namespace ancensus

#endif
