#ifndef QLEG_CLI_HPP
#define QLEG_CLI_HPP

#include <iosfwd>
#include <string>

namespace qleg::cli {

struct CliConfig {
    std::string command;  // eval | poly | a0 | gram | integrate | asym | verify
    int k = 0;
    double l = 0.0;       // real only for `asym`; integral elsewhere
    int lp = 0;
    double x = 0.0;
    double tol = 1e-10;
    std::string format = "json";  // json | csv | text
    bool hobson = false;
    int terms = 60;
    std::string suite = "all";
    unsigned threads = 1;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Execute a parsed configuration. Data goes to `out`, diagnostics to `err`.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parse argv (argv[0] is the program name) and run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qleg::cli

#endif // QLEG_CLI_HPP
