#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Command layer behind the nakwide executable. Each command returns the full
// report text plus an exit code so it can be driven from tests.
namespace nakwide::cli {

enum class Format { Json, Text, Dot };

struct RunConfig {
    int m = 0;
    int ell = 0;
    int d = 0;
    std::uint32_t prime = 2;
    int enum_bound = 24;
    /// Not part of any report: results must not depend on it.
    int workers = 1;
    /// "-" is standard output.
    std::string output = "-";
    Format format = Format::Json;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitOracle = 3;
inline constexpr int kExitNotPeriodic = 4;

struct Outcome {
    int exit_code = kExitOk;
    /// Report (empty on error).
    std::string document;
    /// Message for stderr (empty on success).
    std::string error;
};

/// "2,3,6" -> {2,3,6}; empty string is the empty subcategory. InvalidConfig on junk.
std::vector<int> parse_subcat(std::string_view text);
std::optional<Format> parse_format(std::string_view text);

Outcome cmd_classify(const RunConfig& config, const std::vector<int>& subcat);
Outcome cmd_enumerate(const RunConfig& config);
Outcome cmd_reduce(const RunConfig& config, const std::vector<int>& subcat);
Outcome cmd_verify(const RunConfig& config);
Outcome cmd_quiver(const RunConfig& config, const std::optional<std::vector<int>>& highlight);
/// Hom and Ext^d tables from the representation engine ("hom", "ext_d").
Outcome cmd_tables(const RunConfig& config);

/// Full command line entry point. Reports go to `out` (or --out), messages to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace nakwide::cli
