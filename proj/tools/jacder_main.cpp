#include <jacder/cli/run.hpp>

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const jacder::cli::RunResult r = jacder::cli::run_cli(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
