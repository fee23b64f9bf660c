#include "gallai/acceptance.hpp"
#include <iostream>

int main() {
  const int failures = gallai::run_all_acceptance_suites(std::cout);
  if (failures) std::cout << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}
