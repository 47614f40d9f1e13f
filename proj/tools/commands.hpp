#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace charcoords::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitWitness = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

// Full command line without the program name, e.g. {"classify", "c.json"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace charcoords::cli
