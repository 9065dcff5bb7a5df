#include "eideal/glue.hpp"

#include "eideal/errors.hpp"

#include <algorithm>

namespace eideal {

namespace {

void require_disjoint(const Graph& g1, const Graph& g2) {
    for (const auto& name : g2.names())
        if (g1.contains(name)) throw GraphError("name collision: '" + name + "' occurs in both operands");
}

void require_fresh(std::string_view name, const Graph& g1, const Graph& g2,
                   std::initializer_list<std::string_view> allowed) {
    if (!is_valid_vertex_name(name)) throw GraphError("invalid vertex name '" + std::string(name) + "'");
    if (std::find(allowed.begin(), allowed.end(), name) != allowed.end()) return;
    if (g1.contains(name) || g2.contains(name))
        throw GraphError("name collision: '" + std::string(name) + "' is already a vertex");
}

} // namespace

const char* to_string(GlueWarning w) {
    switch (w) {
    case GlueWarning::support_degree_one: return "support_degree_one";
    case GlueWarning::operand_is_p2: return "operand_is_p2";
    }
    return "unknown";
}

std::vector<LeafSite> leaf_sites(const Graph& g) {
    std::vector<LeafSite> out;
    for (VertexId v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) out.push_back({g.name(v), g.name(g.neighbors(v).front())});
    std::sort(out.begin(), out.end(), [](const LeafSite& a, const LeafSite& b) { return a.leaf < b.leaf; });
    return out;
}

LeafSite leaf_site(const Graph& g, std::string_view u) {
    auto v = g.find(u);
    if (!v) throw PreconditionError("unknown vertex '" + std::string(u) + "'");
    if (g.degree(*v) != 1)
        throw PreconditionError("'" + std::string(u) + "' is not a leaf (degree " + std::to_string(g.degree(*v)) + ")");
    return {std::string(u), g.name(g.neighbors(*v).front())};
}

Graph delete_leaf(const Graph& g, std::string_view u) {
    LeafSite site = leaf_site(g, u);
    std::vector<std::string> drop{site.leaf};
    return remove_vertices(g, drop);
}

Composite circ(const Graph& g1, std::string_view u1, const Graph& g2, std::string_view u2,
               std::string_view v_name) {
    LeafSite s1 = leaf_site(g1, u1);
    LeafSite s2 = leaf_site(g2, u2);
    require_disjoint(g1, g2);
    require_fresh(v_name, g1, g2, {s1.support, s2.support});

    const VertexId id_u1 = g1.id(s1.leaf), id_v1 = g1.id(s1.support);
    const VertexId id_u2 = g2.id(s2.leaf), id_v2 = g2.id(s2.support);

    std::vector<std::string> names;
    std::vector<VertexId> map1(g1.order(), 0), map2(g2.order(), 0);
    for (VertexId v = 0; v < g1.order(); ++v) {
        if (v == id_u1) continue;
        map1[v] = static_cast<VertexId>(names.size());
        names.push_back(v == id_v1 ? std::string(v_name) : g1.name(v));
    }
    const VertexId merged = map1[id_v1];
    for (VertexId v = 0; v < g2.order(); ++v) {
        if (v == id_u2) continue;
        if (v == id_v2) {
            map2[v] = merged;
            continue;
        }
        map2[v] = static_cast<VertexId>(names.size());
        names.push_back(g2.name(v));
    }

    std::vector<Edge> edges;
    for (const Edge& e : g1.edges())
        if (e.a != id_u1 && e.b != id_u1) edges.push_back(Edge{map1[e.a], map1[e.b]});
    for (const Edge& e : g2.edges())
        if (e.a != id_u2 && e.b != id_u2) edges.push_back(Edge{map2[e.a], map2[e.b]});

    Composite out{Graph::from_ids(std::move(names), edges), {}};
    if (g1.degree(id_v1) == 1 || g2.degree(id_v2) == 1) out.warnings.push_back(GlueWarning::support_degree_one);
    auto is_p2 = [](const Graph& g) { return g.order() == 2 && g.size() == 1; };
    if (is_p2(g1) || is_p2(g2)) out.warnings.push_back(GlueWarning::operand_is_p2);
    return out;
}

Composite star_glue(const Graph& g1, std::string_view u1, const Graph& g2, std::string_view u2,
                    std::string_view u_name) {
    LeafSite s1 = leaf_site(g1, u1);
    LeafSite s2 = leaf_site(g2, u2);
    require_disjoint(g1, g2);
    require_fresh(u_name, g1, g2, {s1.leaf, s2.leaf});

    const VertexId id_u1 = g1.id(s1.leaf);
    const VertexId id_u2 = g2.id(s2.leaf);

    std::vector<std::string> names;
    for (VertexId v = 0; v < g1.order(); ++v) names.push_back(v == id_u1 ? std::string(u_name) : g1.name(v));
    std::vector<VertexId> map2(g2.order(), 0);
    for (VertexId v = 0; v < g2.order(); ++v) {
        if (v == id_u2) {
            map2[v] = id_u1;
            continue;
        }
        map2[v] = static_cast<VertexId>(names.size());
        names.push_back(g2.name(v));
    }

    std::vector<Edge> edges = g1.edges();
    for (const Edge& e : g2.edges()) edges.push_back(Edge{map2[e.a], map2[e.b]});
    return {Graph::from_ids(std::move(names), edges), {}};
}

Graph clique_sum_p2(const Graph& g1, std::string_view u, std::string_view new_vertex) {
    const VertexId id_u = g1.id(u);
    if (!is_valid_vertex_name(new_vertex)) throw GraphError("invalid vertex name '" + std::string(new_vertex) + "'");
    if (g1.contains(new_vertex)) throw GraphError("name collision: '" + std::string(new_vertex) + "' is already a vertex");
    std::vector<std::string> names = g1.names();
    names.emplace_back(new_vertex);
    std::vector<Edge> edges = g1.edges();
    edges.push_back(Edge{id_u, static_cast<VertexId>(g1.order())});
    return Graph::from_ids(std::move(names), edges);
}

} // namespace eideal
