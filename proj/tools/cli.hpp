#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twosq::cli {

inline constexpr const char* kVersion = "0.1.0";

// exit codes: 0 ok, 2 argument error, 3 accuracy or resource error
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace twosq::cli
