#ifndef IPM_CLI_HPP
#define IPM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ipm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitPrecondition = 3;

/// Runs one command. `args` excludes the program name. Results go to `out`;
/// failures go to `err` as a one-line JSON record
/// {"error": "input" | "precondition", "message": ..., ...}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The output of `demo umbrella`.
std::string umbrella_demo();

}  // namespace ipm::cli

#endif  // IPM_CLI_HPP
