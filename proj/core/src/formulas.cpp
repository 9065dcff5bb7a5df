#include "eideal/formulas.hpp"

#include "eideal/cm_recognition.hpp"
#include "eideal/errors.hpp"
#include "eideal/glue.hpp"
#include "eideal/invariants.hpp"

namespace eideal {

namespace {

void require_cm(const Graph& g, Verification v, std::string_view what) {
    if (v == Verification::trusted) return;
    CMVerdict verdict = recognize_cm(g);
    if (!verdict.is_cm())
        throw PreconditionError(std::string(what) + " is not Cohen-Macaulay bipartite: " + to_string(verdict.reason));
}

std::size_t cm_depth(const Graph& g) { return g.order() / 2; }
std::size_t cm_reg(const Graph& g) { return induced_matching_number(g); }

} // namespace

std::size_t theta_drop(const Graph& g, std::string_view u) {
    LeafSite site = leaf_site(g, u);
    std::vector<std::string> drop{site.support};
    return induced_matching_number(remove_vertices(g, drop)) == induced_matching_number(g) ? 0 : 1;
}

AlgebraicValues cm_values(const Graph& g, Verification v) {
    require_cm(g, v, "graph");
    return {cm_depth(g), cm_reg(g), std::string(kCmValues)};
}

AlgebraicValues path_values(std::size_t n) {
    if (n < 2) throw PreconditionError("path formula needs n >= 2");
    return {(n + 2) / 3, (n + 1) / 3, std::string(kPathValues)};
}

AlgebraicValues leaf_delete_values(const Graph& g, std::string_view u, Verification v) {
    require_cm(g, v, "graph");
    LeafSite site = leaf_site(g, u);
    const std::size_t support_degree = g.degree(g.id(site.support));
    const std::size_t depth = support_degree >= 2 ? cm_depth(g) - 1 : cm_depth(g);
    return {depth, cm_reg(g) - theta_drop(g, u), std::string(kLeafDelete)};
}

AlgebraicValues circ_values(const Graph& g1, std::string_view u1, const Graph& g2, std::string_view u2,
                            Verification v) {
    require_cm(g1, v, "first operand");
    require_cm(g2, v, "second operand");
    LeafSite s1 = leaf_site(g1, u1);
    LeafSite s2 = leaf_site(g2, u2);
    const bool both_degree_one = g1.degree(g1.id(s1.support)) == 1 && g2.degree(g2.id(s2.support)) == 1;
    const std::size_t s = both_degree_one ? 1 : 2;
    const std::size_t t = theta_drop(g1, u1) + theta_drop(g2, u2);
    return {cm_depth(g1) + cm_depth(g2) - s, cm_reg(g1) + cm_reg(g2) - t, std::string(kCircValues)};
}

AlgebraicValues star_values(const Graph& g1, std::string_view u1, const Graph& g2, std::string_view u2,
                            Verification v) {
    require_cm(g1, v, "first operand");
    require_cm(g2, v, "second operand");
    const std::size_t t = theta_drop(g1, u1) + theta_drop(g2, u2);
    const std::size_t s = t == 2 ? 1 : 0;
    return {cm_depth(g1) + cm_depth(g2) - 1, cm_reg(g1) + cm_reg(g2) - s, std::string(kStarValues)};
}

std::size_t clique_sum_p2_depth(const Graph& g1, std::string_view u, Verification v) {
    require_cm(g1, v, "graph");
    leaf_site(g1, u);
    return cm_depth(g1);
}

} // namespace eideal
