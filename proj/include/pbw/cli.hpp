#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pbw {

// pbwcheck <command> [options] <file>. Exit codes: 0 verdict holds, 1 verdict
// fails, 2 input error (including unknown commands and bad files).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbw
