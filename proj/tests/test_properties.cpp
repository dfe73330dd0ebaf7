#include <doctest.h>

#include "properties.hpp"

using namespace cubicdet;

// The acceptance run uses 1000 cases per suite; the unit run keeps it short.
constexpr std::size_t kCases = 100;

TEST_CASE("Randomized property suites") {
    for (const auto& suite : props::all_suites()) {
        SUBCASE(suite.name) {
            auto r = suite.run(kCases, 20240601);
            INFO(r.first_failure);
            CHECK(r.cases == kCases);
            CHECK(r.failures == 0);
        }
    }
}
