#include <vector>
#include <string>

#include "wwlab/cli.hpp"

int main(int argc, char** argv) {
  return wwlab::run(std::vector<std::string>(argv + 1, argv + argc));
}
