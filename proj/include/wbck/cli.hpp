#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wbck {

// Exit codes: 0 success / verdict holds, 1 verdict fails / counterexample
// found, 2 usage or format error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wbck
