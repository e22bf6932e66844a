#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace cgwc {

// Hooks injected by the binary; selftest runs the acceptance suites, which
// live next to the tests.
struct CommandHooks {
  std::function<int(const std::vector<std::string>& args, std::ostream& out)> selftest;
};

// Entry point behind the cgwc binary. Exit codes: 0 = YES (or success for
// non-decision commands), 1 = NO, 2 = error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                const CommandHooks& hooks = {});

}  // namespace cgwc
