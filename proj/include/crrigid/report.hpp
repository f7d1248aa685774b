/*
 * report.hpp
 * ----------
 * Session configuration, JSON input loading and the analysis drivers
 * behind the CLI subcommands.  Reports are deterministic: identical input
 * and seed produce byte-identical JSON.
 *
 * Exit protocol: 0 success, 2 validation failure (the map does not send M
 * into M', invalid sample points, Q axiom violations), 1 internal errors
 * including expression and file syntax errors.
 */
#pragma once

#include "crrigid/higher.hpp"
#include "crrigid/nondegen.hpp"
#include "crrigid/segre.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>

namespace crrigid {

inline constexpr const char* kToolName = "crrigid";
inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SessionConfig {
    std::int64_t sqrt_d = 2;
    int degree_cap = 0;   // 0: default deg(H) + 2
    int nondeg_cap = 0;   // 0: default deg(H) + 2
    int prolong_cap = 0;  // 0: default degree_cap + (order-1) * deg(H)
    int order = 2;        // holk order
    int bound = 3;        // segre bound
    std::uint64_t seed = 20140917;
    bool seed_from_cli = false;
    std::string json_out;
};

struct AnalysisSetup {
    SessionConfig cfg;
    std::vector<std::string> vars;
    std::vector<std::string> target_vars;
    Hypersurface M;
    Hypersurface Mp;
    HoloMap H;
    Json echo;
};

struct SegreSetup {
    SessionConfig cfg;
    std::vector<std::string> vars;
    NormalComplexification nc;
    Json echo;
};

AnalysisSetup load_analysis_input(const std::string& path, const SessionConfig& cli);
SegreSetup load_segre_input(const std::string& path, const SessionConfig& cli);

Json run_analyze(const AnalysisSetup& setup);
Json run_nondegen(const AnalysisSetup& setup);
Json run_holk(const AnalysisSetup& setup);
Json run_segre(const SegreSetup& setup);

// Serializes with a trailing newline; writes to cfg.json_out or stdout.
void emit_report(const Json& report, const SessionConfig& cfg);

}  // namespace crrigid
