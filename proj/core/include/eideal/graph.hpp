#ifndef EIDEAL_GRAPH_HPP
#define EIDEAL_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eideal {

using VertexId = std::uint32_t;
using VertexMask = std::uint64_t;

/// Exhaustive searches index vertices by bit position.
inline constexpr std::size_t kMaxMaskVertices = 64;

/// Undirected edge stored with `a < b`.
struct Edge {
    VertexId a;
    VertexId b;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

using NamedEdge = std::pair<std::string, std::string>;

/**
 * Finite simple graph with named vertices.
 *
 * Immutable once built: every operation in the library returns a new value.
 * Vertex ids are positions in the vertex sequence, so the vertex order of a
 * parsed file is preserved. Isolated vertices are allowed.
 */
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on an invalid name, duplicate vertex, loop,
    /// duplicate edge or undeclared endpoint.
    Graph(std::vector<std::string> vertices, const std::vector<NamedEdge>& edges);

    /// Same validation as the named constructor, with endpoints given by id.
    static Graph from_ids(std::vector<std::string> vertices, const std::vector<Edge>& edges);

    std::size_t order() const noexcept { return names_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return names_.empty(); }

    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(VertexId v) const { return names_.at(v); }

    std::optional<VertexId> find(std::string_view name) const;
    /// Like find(), but throws GraphError for an unknown name.
    VertexId id(std::string_view name) const;
    bool contains(std::string_view name) const { return find(name).has_value(); }

    /// Sorted by (a, b).
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::vector<NamedEdge> named_edges() const;

    /// Sorted by id.
    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_.at(v); }
    std::size_t degree(VertexId v) const { return adj_.at(v).size(); }
    bool adjacent(VertexId a, VertexId b) const;

    /// Requires order() <= kMaxMaskVertices.
    std::vector<VertexMask> adjacency_masks() const;

    friend bool operator==(const Graph& lhs, const Graph& rhs) {
        return lhs.names_ == rhs.names_ && lhs.edges_ == rhs.edges_;
    }

private:
    void build(const std::vector<Edge>& edges);

    std::vector<std::string> names_;
    std::map<std::string, VertexId, std::less<>> index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adj_;
};

bool is_valid_vertex_name(std::string_view name);

// ---------------------------------------------------------------------------
// Text format
//
//   # comment
//   v <name>
//   e <name> <name>
//
// Names match [A-Za-z0-9_.]+. Serialization writes the `v` lines in vertex
// order followed by the `e` lines sorted by (min endpoint, max endpoint).
// ---------------------------------------------------------------------------

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);
Graph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const Graph& g);

// ---------------------------------------------------------------------------
// Structure
// ---------------------------------------------------------------------------

struct Bipartition {
    std::vector<std::string> part_x;
    std::vector<std::string> part_y;

    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// BFS two-colouring. The lexicographically smallest vertex of every
/// component goes to part_x. Empty when some component has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

/// An odd closed walk (first vertex repeated at the end) when g is not
/// bipartite.
std::optional<std::vector<std::string>> odd_closed_walk(const Graph& g);

bool is_valid_bipartition(const Graph& g, const Bipartition& b);

Graph induced_subgraph(const Graph& g, std::span<const std::string> keep);
Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep);
Graph remove_vertices(const Graph& g, std::span<const std::string> drop);

struct Component {
    std::vector<std::string> vertices; // in graph order
    std::size_t diameter = 0;
};

/// Components sorted by their lexicographically smallest vertex name.
std::vector<Component> components_and_diameters(const Graph& g);
bool is_connected(const Graph& g);

/// True when g is a path on at least two vertices.
bool is_path(const Graph& g);

// ---------------------------------------------------------------------------
// Construction helpers
// ---------------------------------------------------------------------------

Graph with_prefix(const Graph& g, std::string_view prefix);
Graph disjoint_union(const Graph& lhs, const Graph& rhs);
/// Vertex i of the result is vertex order[i] of g.
Graph permute_vertices(const Graph& g, std::span<const VertexId> order);
/// Renames vertex i to names[i].
Graph rename_vertices(const Graph& g, std::vector<std::string> names);

Graph path_graph(std::size_t n, std::string_view prefix = "p");
Graph cycle_graph(std::size_t n, std::string_view prefix = "c");
Graph edgeless_graph(std::size_t n, std::string_view prefix = "i");

} // namespace eideal

#endif // EIDEAL_GRAPH_HPP
