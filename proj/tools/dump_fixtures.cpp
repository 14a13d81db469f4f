#include <iostream>

#include "reality/fixtures.hpp"

int main() {
  std::cout << reality::fixture_file_text();
  return 0;
}
