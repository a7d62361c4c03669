#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace colnum::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsage = 2, kGuard = 3 };

// args excludes the program name. Normal output goes to out, diagnostics
// to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

// Hex SHA-256 of a file's bytes.
std::string sha256_file(const std::string& path);

}  // namespace colnum::cli
