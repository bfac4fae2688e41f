#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eulerian {

// Dispatches one CLI invocation. Exit codes: 0 success, 1 the mathematics
// said no (tuple not Eulerian, no solution, point off curve), 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace eulerian
