#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bftorus::cli {

// args excludes the program name. Exit status: 0 success, 1 usage, I/O or
// parse failure, 2 when a library precondition fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bftorus::cli
