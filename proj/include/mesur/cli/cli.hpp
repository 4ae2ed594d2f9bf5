#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace mesur::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

/// Settings shared by all subcommands. Precedence, lowest first: built-in
/// defaults, the JSON config file, MESUR_STORE / MESUR_SIDECAR, flags.
struct Config {
    std::string store_path = "mesur.store";
    std::string sidecar_path = "mesur.sidecar";
    std::string provider = "urn:mesur:provider:default";
    std::vector<std::pair<std::string, std::string>> namespaces;  // extra prefix -> base
    int precision = 6;
    int verbosity = 0;

    /// The ledger and lock files live next to the store snapshot.
    std::string ledger_path() const { return store_path + ".ledger"; }
    std::string lock_path() const { return store_path + ".lock"; }
};

/// Reads a JSON object with any of: store, sidecar, provider, namespaces
/// (object of prefix -> base), precision, verbosity. Fields not present keep
/// the values already in `config`. Throws FormatError.
void apply_config_file(const std::string& path, Config& config);

/// Runs the command line. Never throws; returns the process exit code.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mesur::cli
