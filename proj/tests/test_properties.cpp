#include <doctest.h>

#include "groupwidth/generators.hpp"
#include "properties.hpp"

using namespace gw;

TEST_CASE("property battery over the standard fixtures")
{
    for (const auto& r : props::run_all()) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.ok);
        CHECK(r.checked > 0);
    }
}

TEST_CASE("normalization soundness catches a wrong answer")
{
    // the triangle's true minimum is 1; brute force and search must agree on it
    const auto r = props::normalization_soundness(3);
    CHECK(r.ok);
    CHECK(r.checked == 2 * (1 + 1 + 2));
}
