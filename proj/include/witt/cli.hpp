#ifndef WITT_CLI_HPP
#define WITT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace witt::cli {

inline constexpr const char* kVersion = "witt 0.1.0";

/// Exit codes: 0 success, 1 parse error, 2 domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace witt::cli

#endif
