#include <iostream>
#include <string>
#include <vector>

#include "cgwc/cli.hpp"

#include "acceptance/criteria.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  cgwc::CommandHooks hooks;
  hooks.selftest = [](const std::vector<std::string>& selection, std::ostream& out) {
    return cgwc_acceptance::run_criteria(selection, out);
  };
  return cgwc::run_command(args, std::cout, std::cerr, hooks);
}
