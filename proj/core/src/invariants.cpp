#include "eideal/invariants.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace eideal {

namespace {

constexpr VertexMask bit(VertexId v) { return VertexMask{1} << v; }

VertexId lowest(VertexMask m) { return static_cast<VertexId>(std::countr_zero(m)); }

VertexMask all_vertices(std::size_t n) {
    return n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

// Maximum independent set size inside `cand`.
void max_independent(const std::vector<VertexMask>& adj, VertexMask cand, std::size_t cur, std::size_t& best) {
    if (cur + static_cast<std::size_t>(std::popcount(cand)) <= best) return;
    // Vertices with no neighbour inside cand can always be taken.
    VertexMask free = 0;
    int max_deg = -1;
    VertexId pivot = 0;
    for (VertexMask m = cand; m; m &= m - 1) {
        VertexId v = lowest(m);
        int d = std::popcount(adj[v] & cand);
        if (d == 0) free |= bit(v);
        if (d > max_deg) {
            max_deg = d;
            pivot = v;
        }
    }
    if (free) {
        max_independent(adj, cand & ~free, cur + static_cast<std::size_t>(std::popcount(free)), best);
        return;
    }
    if (cand == 0) {
        best = std::max(best, cur);
        return;
    }
    max_independent(adj, cand & ~adj[pivot] & ~bit(pivot), cur + 1, best);
    max_independent(adj, cand & ~bit(pivot), cur, best);
}

std::size_t max_independent(const std::vector<VertexMask>& adj) {
    std::size_t best = 0;
    max_independent(adj, all_vertices(adj.size()), 0, best);
    return best;
}

// Kuhn's augmenting paths from the part_x side.
std::size_t bipartite_matching(const Graph& g, const Bipartition& parts) {
    std::vector<bool> left(g.order(), false);
    for (const auto& n : parts.part_x) left[g.id(n)] = true;
    constexpr VertexId kNone = ~VertexId{0};
    std::vector<VertexId> mate(g.order(), kNone);
    std::vector<bool> visited;

    std::function<bool(VertexId)> augment = [&](VertexId x) {
        for (VertexId y : g.neighbors(x)) {
            if (visited[y]) continue;
            visited[y] = true;
            if (mate[y] == kNone || augment(mate[y])) {
                mate[y] = x;
                mate[x] = y;
                return true;
            }
        }
        return false;
    };

    std::size_t size = 0;
    for (VertexId x = 0; x < g.order(); ++x) {
        if (!left[x]) continue;
        visited.assign(g.order(), false);
        if (augment(x)) ++size;
    }
    return size;
}

void max_matching(const std::vector<VertexMask>& adj, VertexMask avail, std::size_t cur, std::size_t& best) {
    VertexMask live = 0;
    for (VertexMask m = avail; m; m &= m - 1) {
        VertexId v = lowest(m);
        if (adj[v] & avail) live |= bit(v);
    }
    if (cur + static_cast<std::size_t>(std::popcount(live)) / 2 <= best) {
        best = std::max(best, cur);
        return;
    }
    if (live == 0) {
        best = std::max(best, cur);
        return;
    }
    VertexId a = lowest(live);
    for (VertexMask m = adj[a] & live; m; m &= m - 1) {
        VertexId b = lowest(m);
        max_matching(adj, live & ~bit(a) & ~bit(b), cur + 1, best);
    }
    max_matching(adj, live & ~bit(a), cur, best);
}

void min_maximal(const std::vector<VertexMask>& adj, VertexMask free, std::size_t cur, std::size_t& best) {
    if (cur >= best) return;
    // Find an edge with both ends unmatched; none means the matching is maximal.
    for (VertexMask m = free; m; m &= m - 1) {
        VertexId a = lowest(m);
        VertexMask na = adj[a] & free;
        if (!na) continue;
        if (cur + 1 >= best) return;
        VertexId b = lowest(na);
        // Any maximal extension matches a or b.
        for (VertexMask c = na; c; c &= c - 1) {
            VertexId w = lowest(c);
            min_maximal(adj, free & ~bit(a) & ~bit(w), cur + 1, best);
        }
        for (VertexMask c = adj[b] & free & ~bit(a); c; c &= c - 1) {
            VertexId w = lowest(c);
            min_maximal(adj, free & ~bit(b) & ~bit(w), cur + 1, best);
        }
        return;
    }
    best = cur;
}

void max_induced_matching(const std::vector<VertexMask>& adj, VertexMask avail, std::size_t cur, std::size_t& best) {
    VertexMask live = 0;
    for (VertexMask m = avail; m; m &= m - 1) {
        VertexId v = lowest(m);
        if (adj[v] & avail) live |= bit(v);
    }
    best = std::max(best, cur);
    if (live == 0 || cur + static_cast<std::size_t>(std::popcount(live)) / 2 <= best) return;
    VertexId a = lowest(live);
    for (VertexMask m = adj[a] & live; m; m &= m - 1) {
        VertexId b = lowest(m);
        VertexMask closed = adj[a] | adj[b] | bit(a) | bit(b);
        max_induced_matching(adj, live & ~closed, cur + 1, best);
    }
    max_induced_matching(adj, live & ~bit(a), cur, best);
}

} // namespace

std::size_t matching_number(const Graph& g) {
    if (auto parts = bipartition(g)) return bipartite_matching(g, *parts);
    auto adj = g.adjacency_masks();
    std::size_t best = 0;
    max_matching(adj, all_vertices(g.order()), 0, best);
    return best;
}

std::size_t min_maximal_matching_number(const Graph& g) {
    auto adj = g.adjacency_masks();
    std::size_t best = g.order() / 2 + 1;
    min_maximal(adj, all_vertices(g.order()), 0, best);
    return best;
}

std::size_t induced_matching_number(const Graph& g) {
    auto adj = g.adjacency_masks();
    std::size_t best = 0;
    max_induced_matching(adj, all_vertices(g.order()), 0, best);
    return best;
}

std::size_t star_packing_number(const Graph& g) {
    auto adj = g.adjacency_masks();
    // Conflict graph: two centres clash when their closed neighbourhoods meet.
    std::vector<VertexMask> clash(g.order(), 0);
    for (VertexId x = 0; x < g.order(); ++x) {
        for (VertexId y = x + 1; y < g.order(); ++y) {
            if ((adj[x] | bit(x)) & (adj[y] | bit(y))) {
                clash[x] |= bit(y);
                clash[y] |= bit(x);
            }
        }
    }
    return max_independent(clash);
}

IndependenceCover independence_and_cover(const Graph& g) {
    std::size_t indep = max_independent(g.adjacency_masks());
    return {indep, g.order() - indep};
}

DepthBounds depth_bounds(const Graph& g) {
    DepthBounds b;
    b.lower_star = star_packing_number(g);
    for (const auto& c : components_and_diameters(g)) b.lower_diam += (c.diameter + 3) / 3;
    if (is_connected(g) && bipartition(g)) b.upper_bipartite = g.order() / 2;
    return b;
}

InvariantReport invariant_report(const Graph& g) {
    InvariantReport r;
    r.alpha = matching_number(g);
    r.beta = min_maximal_matching_number(g);
    r.theta = induced_matching_number(g);
    r.gamma = star_packing_number(g);
    auto ic = independence_and_cover(g);
    r.indep = ic.indep;
    r.cover = ic.cover;
    return r;
}

} // namespace eideal
