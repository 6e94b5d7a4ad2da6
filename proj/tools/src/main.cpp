#include <iostream>

#include "qcg/cli/run.hpp"

int main(int argc, char** argv) {
  const auto result = qcg::cli::run_command_line(argc, argv);
  std::cout << result.output;
  if (!result.error.empty()) std::cerr << "error: " << result.error << '\n';
  return result.exit_code;
}
