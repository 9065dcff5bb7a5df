#ifndef EIDEAL_CM_RECOGNITION_HPP
#define EIDEAL_CM_RECOGNITION_HPP

#include "eideal/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace eideal {

/// Index pair (i, j), 1-based, meaning the edge {x_i, y_j}.
using OrderPair = std::pair<std::size_t, std::size_t>;
using OrderRelation = std::set<OrderPair>;

/**
 * Certificate that a bipartite graph is Cohen-Macaulay.
 *
 * `pairs[k - 1]` is (x_k, y_k). The edge {x_i, y_j} exists exactly when
 * (i, j) is in `order_relation`, and that relation is a partial order whose
 * numbering is a linear extension: every (i, j) has i <= j, every (i, i) is
 * present, and (i, j), (j, k) imply (i, k).
 */
struct CMLabeling {
    std::vector<std::pair<std::string, std::string>> pairs;
    OrderRelation order_relation;

    std::size_t size() const noexcept { return pairs.size(); }
};

/// Why a graph has no Cohen-Macaulay labeling.
enum class CMRejection {
    none,
    not_bipartite,
    isolated_vertex,
    unequal_parts,
    no_perfect_matching,
    no_poset_matching,
};

const char* to_string(CMRejection r);

struct CMVerdict {
    std::optional<CMLabeling> labeling;
    CMRejection reason = CMRejection::none;

    bool is_cm() const noexcept { return labeling.has_value(); }
};

/// Searches the perfect matchings of g for one whose induced edge relation is
/// a partial order; the certificate is numbered by the lexicographically
/// smallest topological order (by x-vertex name).
CMVerdict recognize_cm(const Graph& g);

std::optional<CMLabeling> find_cm_labeling(const Graph& g);
bool is_cm_bipartite(const Graph& g);

/// Re-checks all labeling conditions against g.
bool is_valid_cm_labeling(const Graph& g, const CMLabeling& labeling);

/// Graph of a partial order on [n]: vertices x1..xn, y1..yn (after
/// relabeling by a topological order) and edges {x_i, y_j} for i <= j in the
/// order. Throws PreconditionError when `relation` is not a partial order.
Graph poset_to_graph(std::size_t n, const OrderRelation& relation);

/// Uniform draw in [0, 1) from one mt19937_64 output (53 high bits).
double unit_uniform(std::uint64_t raw);

/// Random Cohen-Macaulay bipartite graph: each forward pair (i, j), i < j, of
/// [n_pairs] is drawn in lexicographic order and kept when
/// unit_uniform(mt19937_64(seed)()) < density; the reflexive-transitive
/// closure of the kept pairs is handed to poset_to_graph.
Graph random_cm_graph(std::size_t n_pairs, double density, std::uint64_t seed);

} // namespace eideal

#endif // EIDEAL_CM_RECOGNITION_HPP
