#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hilbert_alloc {

/// Entry point of the `hilbert-alloc` tool. Subcommands: alloc, worst,
/// bounds, scenario, oracle, hilbert. Returns 0 on success, 1 on input
/// errors and 2 when an internal invariant check fails.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hilbert_alloc
