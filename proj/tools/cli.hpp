#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace racgk::cli {

enum class Format { Json, Text };

struct RunConfig {
    std::string command;
    std::vector<std::string> graph_paths;
    std::string q = "1";   // uniform "a/b" or per-vertex "a=1/3,b=1/2"
    std::optional<std::string> q1;
    std::optional<std::string> q2;
    int n = 3;
    std::optional<std::size_t> radius;
    double tolerance = 1e-12;
    Format format = Format::Json;
    std::optional<std::size_t> element_cap;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv-style arguments (without the program name) and runs the
/// command. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already-parsed configuration.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace racgk::cli
