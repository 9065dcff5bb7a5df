#include "eideal/homology.hpp"
#include "eideal/sweep.hpp"

#include <doctest.h>

using namespace eideal;

TEST_SUITE("sweep") {

TEST_CASE("theorem names round-trip") {
    for (Theorem t : {Theorem::cm_values, Theorem::leaf, Theorem::circ, Theorem::star, Theorem::pendant})
        CHECK(parse_theorem(to_string(t)) == t);
    CHECK_FALSE(parse_theorem("lemma"));
}

TEST_CASE("operand sizes respect the oracle cap") {
    CHECK(max_pairs_within_cap(Theorem::cm_values, 16) == 8);
    CHECK(max_pairs_within_cap(Theorem::circ, 16) == 4);     // 2*4 + 2*4 - 3 = 13
    CHECK(max_pairs_within_cap(Theorem::star, 16) == 4);     // 8 + 8 - 1 = 15
    CHECK(max_pairs_within_cap(Theorem::pendant, 16) == 7);  // 14 + 1
    CHECK(max_pairs_within_cap(Theorem::leaf, 16) == 8);
    CHECK(max_pairs_within_cap(Theorem::circ, 9) == 3);
}

TEST_CASE("sweeps are deterministic and pass") {
    for (Theorem t : {Theorem::cm_values, Theorem::leaf, Theorem::circ, Theorem::star, Theorem::pendant}) {
        SweepOptions opts;
        opts.theorem = t;
        opts.trials = 12;
        opts.max_pairs = 3;
        opts.seed = 314;
        const SweepSummary a = run_sweep(opts);
        const SweepSummary b = run_sweep(opts);
        CAPTURE(to_string(t));
        REQUIRE(a.trials.size() == 12);
        CHECK(a.failed() == 0);
        CHECK(a.first_counterexample() == nullptr);
        CHECK(a.effective_max_pairs == 3);
        for (std::size_t k = 0; k < a.trials.size(); ++k) {
            CHECK(a.trials[k].index == k);
            CHECK(a.trials[k].graph == b.trials[k].graph);
            CHECK(a.trials[k].description == b.trials[k].description);
            CHECK(a.trials[k].graph.order() <= kDefaultOracleCap);
        }
        CHECK(a.trials.front().reg_checked == (t != Theorem::pendant));
    }
}

TEST_CASE("requested sizes are clamped to the cap") {
    SweepOptions opts;
    opts.theorem = Theorem::circ;
    opts.trials = 2;
    opts.max_pairs = 50;
    CHECK(run_sweep(opts).effective_max_pairs == max_pairs_within_cap(Theorem::circ, kDefaultOracleCap));
}

TEST_CASE("a failing trial is reported as the first counterexample") {
    SweepOptions opts;
    opts.theorem = Theorem::cm_values;
    opts.trials = 3;
    opts.max_pairs = 2;
    SweepSummary s = run_sweep(opts);
    s.trials[1].oracle.depth += 1;
    CHECK(s.failed() == 1);
    REQUIRE(s.first_counterexample() != nullptr);
    CHECK(s.first_counterexample()->index == 1);
}

}
