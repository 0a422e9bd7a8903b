#include "heliomech/cli.hpp"

int main(int argc, char** argv) {
  return heliomech::run_command(std::vector<std::string>(argv + 1, argv + argc));
}
