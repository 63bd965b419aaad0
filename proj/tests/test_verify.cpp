#include "doctest.h"
#include "gkostka/verify.hpp"

using namespace gkostka;

namespace {
void require_pass(const SuiteResult& r) {
  for (const auto& p : r.reports) {
    INFO(r.suite << ": " << p.name << " " << p.counterexample);
    CHECK(p.ok);
    CHECK(p.checked > 0);
  }
}
}  // namespace

TEST_CASE("catalogs") {
  const auto all = all_sequences(3, 3);
  // five single rectangles, five pairs, one triple
  CHECK(all.size() == 5 + 5 + 1);
  for (const auto& r : dominant_sequences(6, 6)) CHECK(r.is_dominant());
  for (const auto& r : nested_sequences(6)) CHECK(r.is_nested());
  for (const auto& [a, b] : comparable_pairs(6, 3)) {
    CHECK(pseudo_geq(a, b));
    CHECK(a != b);
  }
}

TEST_CASE("every suite passes at small size") {
  for (const auto& name : suite_names()) {
    const auto r = run_suite(name, 5);
    CHECK(r.suite == name);
    require_pass(r);
  }
  CHECK_THROWS_AS((void)run_suite("nope", 5), InvalidInput);
}
