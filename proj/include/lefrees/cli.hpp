#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lefrees::cli {

inline constexpr const char* kToolName = "lefrees";
inline constexpr const char* kToolVersion = "0.1.0";

/**
 * Result of one CLI command: a human-readable table for stdout and a
 * machine object for --out. The machine object is deterministic for fixed
 * input and flags (no timestamps or timings inside).
 */
struct CmdResult {
    nlohmann::ordered_json machine;
    std::string human;
};

CmdResult cmd_analyze(const std::string& document_text, std::uint64_t budget);

CmdResult cmd_lefschetz(const std::string& document_text,
                        const std::vector<std::uint32_t>& characteristics,
                        const std::string& maps_mode);  // "all" | "wlp" | "slp"

CmdResult cmd_sdefect(const std::string& document_text, int m, bool poly);

CmdResult cmd_survey_forests(int max_vertices, const std::string& question, int threads);

CmdResult cmd_mixed(const std::string& document_text,
                    const std::optional<std::vector<long long>>& composition, bool all);

CmdResult cmd_permutohedron(const std::string& document_text, int face_dim);

/** Structured error object written on failure. */
nlohmann::ordered_json error_object(const std::string& command, const std::string& message);

}  // namespace lefrees::cli
