#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superds {

// args excludes the program name. Exit codes: 0 ok, 1 usage or parse error,
// 2 domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superds
