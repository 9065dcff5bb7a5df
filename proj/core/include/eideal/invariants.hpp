#ifndef EIDEAL_INVARIANTS_HPP
#define EIDEAL_INVARIANTS_HPP

#include "eideal/graph.hpp"

#include <cstddef>
#include <optional>

namespace eideal {

// Exact combinatorial invariants. All searches are exhaustive with pruning and
// are meant for graphs of a few dozen vertices at most; the bitmask searches
// throw GraphError above kMaxMaskVertices.

/// alpha(G): size of a maximum matching. Augmenting paths when g is
/// bipartite, branch and bound otherwise.
std::size_t matching_number(const Graph& g);

/// beta(G): smallest size of an inclusion-maximal matching (0 without edges).
std::size_t min_maximal_matching_number(const Graph& g);

/// theta(G): largest matching whose vertex set induces exactly its own edges.
std::size_t induced_matching_number(const Graph& g);

/// gamma(G): largest set of centres with pairwise disjoint closed
/// neighbourhoods.
std::size_t star_packing_number(const Graph& g);

struct IndependenceCover {
    std::size_t indep = 0;
    std::size_t cover = 0;
};

IndependenceCover independence_and_cover(const Graph& g);

struct DepthBounds {
    std::size_t lower_star = 0;                    // gamma(G)
    std::size_t lower_diam = 0;                    // sum of ceil((d_i + 1) / 3)
    std::optional<std::size_t> upper_bipartite;    // floor(n / 2), connected bipartite only
};

DepthBounds depth_bounds(const Graph& g);

struct InvariantReport {
    std::size_t alpha = 0;
    std::size_t beta = 0;
    std::size_t theta = 0;
    std::size_t gamma = 0;
    std::size_t indep = 0;
    std::size_t cover = 0;
};

InvariantReport invariant_report(const Graph& g);

} // namespace eideal

#endif // EIDEAL_INVARIANTS_HPP
