#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mwp::cli {

enum ExitCode : int {
  kAllPolynomial = 0,
  kSomeInfinite = 1,
  kInputError = 2,
};

/// Passing sets larger than this are printed in compact form even with --fin.
inline constexpr std::uint64_t kExpansionCap = 1'000'000;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mwp::cli
