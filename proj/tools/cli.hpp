#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace psombor::cli {

enum class Format { json, table, csv };

struct CliConfig {
    std::string subcommand;
    std::vector<std::string> inputs;
    std::vector<double> p_values{2.0};
    std::uint64_t seed = 42;
    Format format = Format::json;
    std::optional<double> tolerance;  // holds and equality, relative
    std::string out_path;
    unsigned jobs = 1;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

// "1,2,3" -> {1, 2, 3}; rejects zero, non-finite and malformed entries.
std::vector<double> parse_p_list(std::string_view text);
// "4..9" or "8" -> inclusive range.
std::pair<std::size_t, std::size_t> parse_range(std::string_view text);
std::optional<Format> parse_format(std::string_view text);

// Environment variable holding the default relative tolerance.
constexpr const char* kToleranceEnv = "PSOMBOR_TOL";

// argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// Arguments without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace psombor::cli
