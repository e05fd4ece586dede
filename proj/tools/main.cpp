#include <iostream>
#include <string>
#include <vector>

#include "commands.hpp"

int main(int argc, char** argv) {
  prkit::cli::apply_thread_env();
  const std::vector<std::string> args(argv + 1, argv + argc);
  return prkit::cli::run(args, std::cin, std::cout, std::cerr);
}
