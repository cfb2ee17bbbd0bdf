#ifndef NCHOPF_CLI_HPP_
#define NCHOPF_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace nchopf {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Results go to `out`,
// diagnostics and progress to `err`. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// Names accepted by `verify`, in the order `verify all` runs them.
std::vector<std::string> verify_suite_names();

}  // namespace nchopf

#endif  // NCHOPF_CLI_HPP_
