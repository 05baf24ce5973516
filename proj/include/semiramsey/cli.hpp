#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semiramsey {

namespace exit_code {
inline constexpr int pass = 0;
inline constexpr int fail = 1;          // a witness was printed
inline constexpr int argument = 2;      // bad arguments or input files
inline constexpr int resource = 3;      // caps, budgets, uncertified partial results
inline constexpr int inconclusive = 4;
}  // namespace exit_code

/// Runs the command line `args` (without the program name). Results go to `out`
/// unless --output is given; diagnostics and error JSON go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semiramsey
