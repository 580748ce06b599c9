#pragma once

#include <string>
#include <vector>

namespace g2grad {

struct SelfCheckItem {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SelfCheckReport {
  bool ok = true;
  unsigned seed = 0;
  std::vector<SelfCheckItem> items;
};

/// End-to-end consistency audit of the algebra layer: multiplication table
/// against the closed Zorn form, conjugation and norm laws (exhaustive on
/// basis pairs plus seeded random samples), the dimension and closure of
/// the derivation algebra, the classical spanning set, and Killing form
/// nondegeneracy.
SelfCheckReport run_selfcheck(unsigned seed = 20240915u);

}  // namespace g2grad
