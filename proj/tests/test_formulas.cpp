#include "brute.hpp"
#include "fixtures.hpp"

#include "eideal/errors.hpp"
#include "eideal/formulas.hpp"
#include "eideal/glue.hpp"
#include "eideal/homology.hpp"

#include <doctest.h>

using namespace eideal;

namespace {

Graph disjoint_edges(std::size_t n) {
    Graph g;
    for (std::size_t k = 1; k <= n; ++k) g = disjoint_union(g, with_prefix(path_graph(2), "e" + std::to_string(k) + "."));
    return g;
}

} // namespace

TEST_SUITE("formulas") {

TEST_CASE("Cohen-Macaulay values") {
    CHECK(cm_values(path_graph(2)) == AlgebraicValues{1, 1, std::string(kCmValues)});
    const auto g2 = cm_values(fixture("fig4_g2.graph"));
    CHECK(g2.depth == 3);
    CHECK(g2.reg == 2);
    for (std::size_t n = 1; n <= 4; ++n) {
        const Graph g = disjoint_edges(n);
        const auto f = cm_values(g);
        CHECK(f.depth == n);
        CHECK(f.reg == n);
        const auto o = oracle_values(g);
        CHECK(o.depth == n);
        CHECK(o.reg == n);
    }
    CHECK_THROWS_AS(cm_values(cycle_graph(4)), PreconditionError);
}

TEST_CASE("path values") {
    CHECK(path_values(2) == AlgebraicValues{1, 1, std::string(kPathValues)});
    CHECK(path_values(4).depth == 2);
    CHECK(path_values(4).reg == 1);
    CHECK(path_values(7).depth == 3);
    CHECK(path_values(7).reg == 2);
    CHECK_THROWS_AS(path_values(1), PreconditionError);
    CHECK_THROWS_AS(path_values(0), PreconditionError);
}

TEST_CASE("leaf deletion values") {
    const auto p2 = leaf_delete_values(path_graph(2), "p1");
    CHECK(p2.depth == 1);
    CHECK(p2.reg == 0);

    const auto p4 = leaf_delete_values(fixture("path4.graph"), "a");
    CHECK(p4.depth == 1);
    CHECK(p4.reg == 1);
    CHECK(p4.depth == path_values(3).depth);
    CHECK(p4.reg == path_values(3).reg);

    const Graph g2 = fixture("fig4_g2.graph");
    const auto f = leaf_delete_values(g2, "u2");
    CHECK(f.depth == 2);
    CHECK(f.reg == 2);
    const auto o = oracle_values(delete_leaf(g2, "u2"));
    CHECK(o.depth == 2);
    CHECK(o.reg == 2);

    CHECK_THROWS_AS(leaf_delete_values(g2, "v2"), PreconditionError);
    CHECK_THROWS_AS(leaf_delete_values(path_graph(3), "p1"), PreconditionError);
}

TEST_CASE("circle product values") {
    const auto fig3 = circ_values(fixture("fig3_g1.graph"), "u1", fixture("fig3_g2.graph"), "u2");
    CHECK(fig3.depth == 3);
    const auto fig4 = circ_values(fixture("fig4_g1.graph"), "u1", fixture("fig4_g2.graph"), "u2");
    CHECK(fig4.depth == 3);

    const Graph l = with_prefix(path_graph(4), "l.");
    const Graph r = with_prefix(path_graph(4), "r.");
    const auto p5 = circ_values(l, "l.p4", r, "r.p1");
    CHECK(p5.depth == 2);
    CHECK(p5.reg == 2);
    CHECK(p5.depth == path_values(5).depth);
    CHECK(p5.reg == path_values(5).reg);
    CHECK(theta_drop(path_graph(4), "p4") == 0);

    CHECK_THROWS_AS(circ_values(cycle_graph(4), "c1", r, "r.p1"), PreconditionError);
}

TEST_CASE("star product values") {
    const Graph l2 = with_prefix(path_graph(2), "l.");
    const Graph r2 = with_prefix(path_graph(2), "r.");
    const auto p3 = star_values(l2, "l.p2", r2, "r.p1");
    CHECK(p3.depth == 1);
    CHECK(p3.reg == 1);
    CHECK(theta_drop(path_graph(2), "p1") == 1);

    const auto p7 = star_values(fixture("path4.graph"), "d", fixture("path4b.graph"), "a2");
    CHECK(p7.depth == 3);
    CHECK(p7.reg == 2);
    CHECK(p7.depth == path_values(7).depth);
    CHECK(p7.reg == path_values(7).reg);

    const Graph g2 = fixture("fig4_g2.graph");
    const Graph p4 = with_prefix(path_graph(4), "q.");
    const auto nine = star_values(g2, "u2", p4, "q.p1");
    CHECK(nine.depth == 4);
    const auto o = oracle_values(star_glue(g2, "u2", p4, "q.p1", "u").graph);
    CHECK(o.depth == 4);
    CHECK(o.reg == nine.reg);
}

TEST_CASE("pendant clique sum keeps depth") {
    CHECK(clique_sum_p2_depth(path_graph(2), "p2") == 1);
    CHECK(path_values(3).depth == 1);
    CHECK(clique_sum_p2_depth(path_graph(4), "p4") == 2);
    CHECK(path_values(5).depth == 2);
    const Graph g2 = fixture("fig4_g2.graph");
    CHECK(clique_sum_p2_depth(g2, "u2") == 3);
    CHECK(oracle_values(clique_sum_p2(g2, "u2", "w")).depth == 3);
    CHECK_THROWS_AS(clique_sum_p2_depth(g2, "v2"), PreconditionError);
}

TEST_CASE("trusted evaluation skips recognition but not leaf checks") {
    const auto f = cm_values(cycle_graph(4), Verification::trusted);
    CHECK(f.depth == 2);
    CHECK_THROWS_AS(leaf_delete_values(path_graph(4), "p2", Verification::trusted), PreconditionError);
}

TEST_CASE("edgeless convention: depth |V|, reg 0") {
    const auto o = oracle_values(edgeless_graph(3));
    CHECK(o.depth == 3);
    CHECK(o.reg == 0);
    CHECK(o.pd == 0);
}

}
