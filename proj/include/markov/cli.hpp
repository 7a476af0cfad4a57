#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace markov {

// Full command-line interface minus main(): parses `args` (no program name),
// writes results to `out` and diagnostics to `err`. Returns 0 on success,
// 1 on domain errors (zero evidence, enumeration cap, ...), 2 on usage and
// model-file errors. The CLI formats and prints; every number it emits comes
// from exactly one core operation.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace markov
