#include <iostream>
#include <string>
#include <vector>

#include "multitree/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  auto parsed = multitree::cli::parse_args(args, std::cout, std::cerr);
  if (!parsed.config) return parsed.exitCode;
  try {
    return multitree::cli::run(*parsed.config, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return multitree::cli::kExitUsage;
  }
}
