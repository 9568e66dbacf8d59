#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maqw {

/// Entry point shared by the maqaoa-walk binary and the in-process CLI
/// tests. args excludes the program name. Exit codes: 0 success/pass,
/// 1 verification fail, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maqw
