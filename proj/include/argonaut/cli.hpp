#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace argonaut {

// Exit codes: 0 ok, 1 property failed, 2 inconclusive, 64 usage,
// 65 knowledge-base or configuration error, 70 resource cap or internal error.
inline constexpr int kExitUsage = 64;
inline constexpr int kExitKb = 65;
inline constexpr int kExitSoftware = 70;

int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// argv[0] is supplied.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace argonaut
