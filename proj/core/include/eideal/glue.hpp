#ifndef EIDEAL_GLUE_HPP
#define EIDEAL_GLUE_HPP

#include "eideal/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace eideal {

/// A degree-one vertex and its unique neighbour.
struct LeafSite {
    std::string leaf;
    std::string support;

    friend bool operator==(const LeafSite&, const LeafSite&) = default;
};

/// All leaf sites, sorted by leaf name.
std::vector<LeafSite> leaf_sites(const Graph& g);

/// Throws PreconditionError when `u` is not a leaf of g.
LeafSite leaf_site(const Graph& g, std::string_view u);

/// g with the leaf u removed; its support stays, possibly isolated.
Graph delete_leaf(const Graph& g, std::string_view u);

/// Gluing situations outside the textbook hypotheses of the circle product
/// that are still accepted.
enum class GlueWarning {
    support_degree_one,   // some deg(v_i) = 1
    operand_is_p2,        // some operand is a single edge
};

const char* to_string(GlueWarning w);

struct Composite {
    Graph graph;
    std::vector<GlueWarning> warnings;
};

/**
 * Circle product (g1, u1) o (g2, u2).
 *
 * Deletes the leaves u1 and u2 and merges their supports v1, v2 into one
 * vertex `v_name` adjacent to (N(v1) - u1) + (N(v2) - u2). The merged vertex
 * takes the position of v1; the remaining g2 vertices follow the g1 ones.
 *
 * Vertex names of g1 and g2 must be disjoint. `v_name` must not name any
 * surviving vertex (reusing v1 or v2 is fine).
 */
Composite circ(const Graph& g1, std::string_view u1, const Graph& g2, std::string_view u2,
               std::string_view v_name);

/**
 * Star product (g1, u1) * (g2, u2): the leaves u1 and u2 become one vertex
 * `u_name` adjacent to v1 and v2. Same naming rules as circ().
 */
Composite star_glue(const Graph& g1, std::string_view u1, const Graph& g2, std::string_view u2,
                    std::string_view u_name);

/// Clique sum with a single edge: a new vertex attached to u.
Graph clique_sum_p2(const Graph& g1, std::string_view u, std::string_view new_vertex);

} // namespace eideal

#endif // EIDEAL_GLUE_HPP
