#include <doctest.h>

#include "sll/lattice.hpp"
#include "sll/theta2_search.hpp"

using namespace sll;

TEST_CASE("search finds instances and they survive the generic verifier") {
    Theta2SearchOptions options;
    options.sample_limit = 3;
    options.stop_after_found = 3;
    Theta2SearchResult result = theta2_search_gf3_dim4(options);

    REQUIRE(result.found >= 1);
    CHECK(result.catalog_failures == 0);
    REQUIRE(!result.samples.empty());

    for (const Theta2Instance& inst : result.samples) {
        auto dec = TwoSumDecomposition::make(inst.v1, inst.v2, inst.w1, inst.w2);
        // The advertised preconditions hold...
        CHECK_FALSE(dec.theta().is_zero());
        CHECK((dec.theta() * dec.theta()).is_zero());
        CHECK(is_direct_sum(std::vector<Subspace>{inst.v1, inst.w2}));
        CHECK(is_direct_sum(std::vector<Subspace>{inst.w1, inst.v2}));
        // ... and the full catalog verifier agrees with the table-driven one.
        TheoremReport rep = verify_theta2_lattice(dec);
        INFO(rep.summary());
        CHECK(rep.all_passed());
    }
}
