#include "support.hpp"

#include "tdho/suite.hpp"

#include <set>

using namespace tdho;

TEST_SUITE("suite") {

TEST_CASE("invariant suite passes its gating checks") {
    const auto results = run_invariant_suite();
    CHECK(results.size() > 20);
    std::set<std::string> names;
    for (const auto& r : results) {
        CAPTURE(r.name);
        CAPTURE(r.measured);
        CHECK(names.insert(r.name).second);
        if (r.gating) CHECK(r.passed);
        CHECK(r.passed == (r.upper ? r.measured <= r.bound : r.measured >= r.bound));
    }
    CHECK(suite_passed(results));
}

TEST_CASE("suite is deterministic") {
    const auto a = run_invariant_suite();
    const auto b = run_invariant_suite();
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].measured == b[i].measured);
}

}
