#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wlm {

// Exit codes: 0 success, 1 usage/parse error, 2 guard exceeded,
// 3 negative equivalence verdict.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wlm
