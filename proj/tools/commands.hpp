#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace addpair::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNonAdditive = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitFalsified = 3;

/// Environment variable holding the default worker count.
inline constexpr const char* kWorkersEnv = "ADDPAIR_WORKERS";

enum class Format { kText, kJson };

struct CheckRequest {
    /// Inline graph6, "@path" for a file, or "-" for the next line of stdin.
    std::string b_source;
    std::string r_source;
    Format format = Format::kText;
};

struct EnumerateRequest {
    int n = 0;
    std::string mode = "exhaustive";
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
    int workers = 1;
    /// Destination of the JSON-lines report; "-" or empty means stdout.
    std::string report_path;
    bool classify_additive = false;
};

int default_workers();

int cmd_check(const CheckRequest& request, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_enumerate(const EnumerateRequest& request, std::ostream& out, std::ostream& err);
int cmd_catalog(const std::string& family, std::ostream& out, std::ostream& err);

}  // namespace addpair::cli
