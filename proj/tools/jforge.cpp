#include <cstdio>

#include "jforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  jforge::CliResult res = jforge::run_cli(args);
  std::fputs(res.out.c_str(), stdout);
  return res.exit_code;
}
