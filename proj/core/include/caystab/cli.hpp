#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace caystab {

/// Runs the command-line front end. Exit codes: 0 all assertions passed,
/// 1 assertion failure (a theorem-violating instance), 2 usage or
/// precondition error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace caystab
