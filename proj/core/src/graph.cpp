#include "eideal/graph.hpp"

#include "eideal/errors.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace eideal {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs_distances(const Graph& g, VertexId source) {
    std::vector<std::size_t> dist(g.order(), kUnreached);
    std::deque<VertexId> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(v)) {
            if (dist[w] == kUnreached) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

// Vertices grouped by component; each group sorted by id, groups ordered by
// their lexicographically smallest name.
std::vector<std::vector<VertexId>> component_ids(const Graph& g) {
    std::vector<VertexId> by_name(g.order());
    for (VertexId v = 0; v < g.order(); ++v) by_name[v] = v;
    std::sort(by_name.begin(), by_name.end(),
              [&](VertexId a, VertexId b) { return g.name(a) < g.name(b); });

    std::vector<bool> seen(g.order(), false);
    std::vector<std::vector<VertexId>> out;
    for (VertexId root : by_name) {
        if (seen[root]) continue;
        std::vector<VertexId> comp;
        std::deque<VertexId> queue{root};
        seen[root] = true;
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (VertexId w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

struct Colouring {
    std::vector<int> colour;          // 0 or 1
    std::vector<VertexId> parent;
    std::vector<std::size_t> depth;
    std::optional<Edge> conflict;
};

Colouring two_colour(const Graph& g) {
    Colouring c;
    c.colour.assign(g.order(), -1);
    c.parent.assign(g.order(), 0);
    c.depth.assign(g.order(), 0);
    for (const auto& comp : component_ids(g)) {
        VertexId root = *std::min_element(comp.begin(), comp.end(), [&](VertexId a, VertexId b) {
            return g.name(a) < g.name(b);
        });
        c.colour[root] = 0;
        c.parent[root] = root;
        std::deque<VertexId> queue{root};
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (VertexId w : g.neighbors(v)) {
                if (c.colour[w] < 0) {
                    c.colour[w] = 1 - c.colour[v];
                    c.parent[w] = v;
                    c.depth[w] = c.depth[v] + 1;
                    queue.push_back(w);
                } else if (c.colour[w] == c.colour[v] && !c.conflict) {
                    c.conflict = Edge{v, w};
                }
            }
        }
    }
    return c;
}

} // namespace

bool is_valid_vertex_name(std::string_view name) {
    if (name.empty()) return false;
    return std::all_of(name.begin(), name.end(), [](char ch) {
        return (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') ||
               ch == '_' || ch == '.';
    });
}

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

Graph::Graph(std::vector<std::string> vertices, const std::vector<NamedEdge>& edges)
    : names_(std::move(vertices)) {
    std::vector<Edge> ids;
    ids.reserve(edges.size());
    for (VertexId v = 0; v < names_.size(); ++v) {
        if (!is_valid_vertex_name(names_[v]))
            throw GraphError("invalid vertex name '" + names_[v] + "'");
        if (!index_.emplace(names_[v], v).second)
            throw GraphError("duplicate vertex '" + names_[v] + "'");
    }
    for (const auto& [a, b] : edges) {
        auto ia = index_.find(a);
        auto ib = index_.find(b);
        if (ia == index_.end()) throw GraphError("edge references undeclared vertex '" + a + "'");
        if (ib == index_.end()) throw GraphError("edge references undeclared vertex '" + b + "'");
        ids.push_back(Edge{ia->second, ib->second});
    }
    build(ids);
}

Graph Graph::from_ids(std::vector<std::string> vertices, const std::vector<Edge>& edges) {
    Graph g;
    g.names_ = std::move(vertices);
    for (VertexId v = 0; v < g.names_.size(); ++v) {
        if (!is_valid_vertex_name(g.names_[v]))
            throw GraphError("invalid vertex name '" + g.names_[v] + "'");
        if (!g.index_.emplace(g.names_[v], v).second)
            throw GraphError("duplicate vertex '" + g.names_[v] + "'");
    }
    for (const Edge& e : edges) {
        if (e.a >= g.names_.size() || e.b >= g.names_.size())
            throw GraphError("edge endpoint out of range");
    }
    g.build(edges);
    return g;
}

void Graph::build(const std::vector<Edge>& edges) {
    edges_.clear();
    edges_.reserve(edges.size());
    for (Edge e : edges) {
        if (e.a == e.b) throw GraphError("loop at vertex '" + names_[e.a] + "'");
        if (e.a > e.b) std::swap(e.a, e.b);
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw GraphError("duplicate edge {" + names_[dup->a] + ", " + names_[dup->b] + "}");

    adj_.assign(names_.size(), {});
    for (const Edge& e : edges_) {
        adj_[e.a].push_back(e.b);
        adj_[e.b].push_back(e.a);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

std::optional<VertexId> Graph::find(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexId Graph::id(std::string_view name) const {
    auto v = find(name);
    if (!v) throw GraphError("unknown vertex '" + std::string(name) + "'");
    return *v;
}

std::vector<NamedEdge> Graph::named_edges() const {
    std::vector<NamedEdge> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.emplace_back(names_[e.a], names_[e.b]);
    return out;
}

bool Graph::adjacent(VertexId a, VertexId b) const {
    const auto& list = adj_.at(a);
    return std::binary_search(list.begin(), list.end(), b);
}

std::vector<VertexMask> Graph::adjacency_masks() const {
    if (order() > kMaxMaskVertices)
        throw GraphError("graph has " + std::to_string(order()) + " vertices; bitmask searches support at most " +
                         std::to_string(kMaxMaskVertices));
    std::vector<VertexMask> masks(order(), 0);
    for (const Edge& e : edges_) {
        masks[e.a] |= VertexMask{1} << e.b;
        masks[e.b] |= VertexMask{1} << e.a;
    }
    return masks;
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

Graph parse_graph(std::string_view text) {
    std::vector<std::string> vertices;
    std::set<std::string, std::less<>> declared;
    std::vector<NamedEdge> edges;
    std::set<std::pair<std::string, std::string>> seen_edges;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        if (tokens[0] == "v") {
            if (tokens.size() != 2) throw ParseError(line_no, "syntax error: expected 'v <name>'");
            if (!is_valid_vertex_name(tokens[1]))
                throw ParseError(line_no, "syntax error: invalid vertex name '" + std::string(tokens[1]) + "'");
            if (!declared.emplace(tokens[1]).second)
                throw ParseError(line_no, "duplicate vertex '" + std::string(tokens[1]) + "'");
            vertices.emplace_back(tokens[1]);
        } else if (tokens[0] == "e") {
            if (tokens.size() != 3) throw ParseError(line_no, "syntax error: expected 'e <name> <name>'");
            for (std::size_t k = 1; k <= 2; ++k) {
                if (!is_valid_vertex_name(tokens[k]))
                    throw ParseError(line_no, "syntax error: invalid vertex name '" + std::string(tokens[k]) + "'");
            }
            if (tokens[1] == tokens[2]) throw ParseError(line_no, "loop at vertex '" + std::string(tokens[1]) + "'");
            for (std::size_t k = 1; k <= 2; ++k) {
                if (!declared.contains(tokens[k]))
                    throw ParseError(line_no, "edge references undeclared vertex '" + std::string(tokens[k]) + "'");
            }
            std::string a(tokens[1]), b(tokens[2]);
            auto key = std::minmax(a, b);
            if (!seen_edges.emplace(key.first, key.second).second)
                throw ParseError(line_no, "duplicate edge {" + a + ", " + b + "}");
            edges.emplace_back(std::move(a), std::move(b));
        } else {
            throw ParseError(line_no, "syntax error: unknown record '" + std::string(tokens[0]) + "'");
        }
        if (end == text.size()) break;
    }
    return Graph(std::move(vertices), edges);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    for (const auto& name : g.names()) out << "v " << name << '\n';
    std::vector<NamedEdge> edges;
    for (const Edge& e : g.edges()) {
        auto [lo, hi] = std::minmax(g.name(e.a), g.name(e.b));
        edges.emplace_back(lo, hi);
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b] : edges) out << "e " << a << ' ' << b << '\n';
    return out.str();
}

Graph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

void write_graph_file(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << serialize_graph(g);
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

// ---------------------------------------------------------------------------
// Structure
// ---------------------------------------------------------------------------

std::optional<Bipartition> bipartition(const Graph& g) {
    Colouring c = two_colour(g);
    if (c.conflict) return std::nullopt;
    Bipartition b;
    for (VertexId v = 0; v < g.order(); ++v) (c.colour[v] == 0 ? b.part_x : b.part_y).push_back(g.name(v));
    return b;
}

std::optional<std::vector<std::string>> odd_closed_walk(const Graph& g) {
    Colouring c = two_colour(g);
    if (!c.conflict) return std::nullopt;
    // root ... a  followed by  b ... root, closed through the edge {a, b}.
    auto climb = [&](VertexId v) {
        std::vector<VertexId> up{v};
        while (c.parent[v] != v) {
            v = c.parent[v];
            up.push_back(v);
        }
        return up;
    };
    auto from_a = climb(c.conflict->a);
    auto from_b = climb(c.conflict->b);
    std::vector<std::string> walk;
    for (VertexId v : from_a) walk.push_back(g.name(v));
    for (auto it = from_b.rbegin() + 1; it != from_b.rend(); ++it) walk.push_back(g.name(*it));
    walk.push_back(g.name(c.conflict->a));
    return walk;
}

bool is_valid_bipartition(const Graph& g, const Bipartition& b) {
    std::vector<int> side(g.order(), -1);
    for (const auto& n : b.part_x) {
        auto v = g.find(n);
        if (!v || side[*v] != -1) return false;
        side[*v] = 0;
    }
    for (const auto& n : b.part_y) {
        auto v = g.find(n);
        if (!v || side[*v] != -1) return false;
        side[*v] = 1;
    }
    if (std::find(side.begin(), side.end(), -1) != side.end()) return false;
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return side[e.a] != side[e.b]; });
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep) {
    std::vector<bool> kept(g.order(), false);
    for (VertexId v : keep) {
        if (v >= g.order()) throw GraphError("vertex id out of range");
        kept[v] = true;
    }
    std::vector<VertexId> new_id(g.order(), 0);
    std::vector<std::string> names;
    for (VertexId v = 0; v < g.order(); ++v) {
        if (kept[v]) {
            new_id[v] = static_cast<VertexId>(names.size());
            names.push_back(g.name(v));
        }
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (kept[e.a] && kept[e.b]) edges.push_back(Edge{new_id[e.a], new_id[e.b]});
    }
    return Graph::from_ids(std::move(names), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const std::string> keep) {
    std::vector<VertexId> ids;
    ids.reserve(keep.size());
    for (const auto& n : keep) ids.push_back(g.id(n));
    return induced_subgraph(g, std::span<const VertexId>(ids));
}

Graph remove_vertices(const Graph& g, std::span<const std::string> drop) {
    std::vector<bool> dropped(g.order(), false);
    for (const auto& n : drop) dropped[g.id(n)] = true;
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < g.order(); ++v)
        if (!dropped[v]) keep.push_back(v);
    return induced_subgraph(g, std::span<const VertexId>(keep));
}

std::vector<Component> components_and_diameters(const Graph& g) {
    std::vector<Component> out;
    for (const auto& comp : component_ids(g)) {
        Component c;
        for (VertexId v : comp) {
            c.vertices.push_back(g.name(v));
            auto dist = bfs_distances(g, v);
            for (VertexId w : comp) c.diameter = std::max(c.diameter, dist[w]);
        }
        out.push_back(std::move(c));
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.order() <= 1 || component_ids(g).size() == 1;
}

bool is_path(const Graph& g) {
    if (g.order() < 2 || g.size() != g.order() - 1 || !is_connected(g)) return false;
    for (VertexId v = 0; v < g.order(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Construction helpers
// ---------------------------------------------------------------------------

Graph with_prefix(const Graph& g, std::string_view prefix) {
    std::vector<std::string> names;
    names.reserve(g.order());
    for (const auto& n : g.names()) names.push_back(std::string(prefix) + n);
    return Graph::from_ids(std::move(names), g.edges());
}

Graph disjoint_union(const Graph& lhs, const Graph& rhs) {
    std::vector<std::string> names = lhs.names();
    names.insert(names.end(), rhs.names().begin(), rhs.names().end());
    std::vector<Edge> edges = lhs.edges();
    const auto shift = static_cast<VertexId>(lhs.order());
    for (const Edge& e : rhs.edges()) edges.push_back(Edge{e.a + shift, e.b + shift});
    return Graph::from_ids(std::move(names), edges);
}

Graph permute_vertices(const Graph& g, std::span<const VertexId> order) {
    if (order.size() != g.order()) throw GraphError("permutation has wrong length");
    std::vector<VertexId> position(g.order(), 0);
    std::vector<bool> used(g.order(), false);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] >= g.order() || used[order[i]]) throw GraphError("not a permutation");
        used[order[i]] = true;
        position[order[i]] = static_cast<VertexId>(i);
        names.push_back(g.name(order[i]));
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back(Edge{position[e.a], position[e.b]});
    return Graph::from_ids(std::move(names), edges);
}

Graph rename_vertices(const Graph& g, std::vector<std::string> names) {
    if (names.size() != g.order()) throw GraphError("rename list has wrong length");
    return Graph::from_ids(std::move(names), g.edges());
}

Graph path_graph(std::size_t n, std::string_view prefix) {
    std::vector<std::string> names;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(std::string(prefix) + std::to_string(i + 1));
        if (i > 0) edges.push_back(Edge{static_cast<VertexId>(i - 1), static_cast<VertexId>(i)});
    }
    return Graph::from_ids(std::move(names), edges);
}

Graph cycle_graph(std::size_t n, std::string_view prefix) {
    if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
    std::vector<std::string> names;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(std::string(prefix) + std::to_string(i + 1));
        edges.push_back(Edge{static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n)});
    }
    return Graph::from_ids(std::move(names), edges);
}

Graph edgeless_graph(std::size_t n, std::string_view prefix) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(prefix) + std::to_string(i + 1));
    return Graph::from_ids(std::move(names), {});
}

} // namespace eideal
