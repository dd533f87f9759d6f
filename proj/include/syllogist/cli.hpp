#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace syllogist::cli {

/// Runs one command ("infer", "check-mood", "compat", "eval", "oracle-range",
/// "lexicon-validate") against the given streams.
/// Exit codes: 0 success, 1 usage/parse error, 2 semantic error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace syllogist::cli
