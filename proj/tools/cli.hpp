#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace turan::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kValidation = 2,
    kBudget = 3,
};

inline constexpr char kManifestFormat[] = "turan.manifest/1";

/// Runs one command line (args excludes the program name). Files are written only after
/// the command has finished computing, each atomically.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& data);

} // namespace turan::cli
