#pragma once

#include <string>

namespace gkostka {

/// Outcome of one checked property: how many instances were examined and the first failure.
struct PropertyReport {
  std::string name;
  long long checked = 0;
  bool ok = true;
  std::string counterexample;

  void fail(std::string what) {
    if (ok) counterexample = std::move(what);
    ok = false;
  }
};

}  // namespace gkostka
