#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace c5census {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

// Exit codes: 0 success (recognize: in class), 1 recognize: not in class,
// 2 bad flags, 3 budget exceeded, 4 invalid input file.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace c5census
