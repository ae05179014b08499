#pragma once

// The lcak command line:
//
//   lcak check <file>... [--json] [--tol T] [--exact|--float] [--require FLAG]...
//   lcak catalog [name] [--json] [--float]
//   lcak classify-aa --a A --b "b1,b2" --v "v1,v2" --A "a11,a12;a21,a22" [--json]
//   lcak fuzz --seed S --count N --family F [--float] [--tol T] [--threads K]
//   lcak --version
//
// Exit codes: 0 when every requested check passes, 1 when one fails, 2 on
// input errors (bad arguments, unreadable or invalid spec files).

#include <ostream>
#include <string>
#include <vector>

namespace lcak::cli {

inline constexpr int kPass = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcak::cli
