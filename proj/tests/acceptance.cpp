#include "burnside/acceptance.hpp"

#include <iostream>

int main() {
  unsigned failed = 0;
  for (unsigned id = 1; id <= burnside::kCriteriaCount; ++id) {
    const auto r = burnside::run_criterion(id);
    std::cout << burnside::format_line(r) << std::endl;
    failed += !r.pass;
  }
  std::cout << (burnside::kCriteriaCount - failed) << "/" << burnside::kCriteriaCount
            << " acceptance criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
