#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isodual {

/// Command front end, in-process so tests can drive it directly.
/// `args` excludes the program name. Exit codes: 0 success (and
/// predicted = computed where applicable), 1 usage or input error,
/// 2 a pair where prediction and computation disagree.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isodual
