#include <iostream>

#include "hedgegraph/cli.hpp"

int main(int argc, char** argv) {
  hedge::cli::Outcome outcome = hedge::cli::run({argv + 1, argv + argc});
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
