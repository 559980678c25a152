#include <iostream>

#include "acceptance.hpp"

int main() {
  const auto results = cbasis::acceptance::run_all(std::cout);
  return cbasis::acceptance::all_passed(results) ? 0 : 1;
}
