#include "eideal/cm_recognition.hpp"

#include "eideal/errors.hpp"
#include "eideal/invariants.hpp"

#include <algorithm>
#include <random>

namespace eideal {

namespace {

using Relation = std::vector<std::vector<bool>>; // rel[p][q]: x_p ~ y_q

// Smallest topological order of a partial order, ties broken by `less`.
template <typename Less>
std::vector<std::size_t> topological_order(const Relation& rel, Less less) {
    const std::size_t n = rel.size();
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> order;
    while (order.size() < n) {
        std::optional<std::size_t> pick;
        for (std::size_t q = 0; q < n; ++q) {
            if (placed[q]) continue;
            bool ready = true;
            for (std::size_t p = 0; p < n && ready; ++p)
                if (p != q && !placed[p] && rel[p][q]) ready = false;
            if (ready && (!pick || less(q, *pick))) pick = q;
        }
        if (!pick) throw PreconditionError("relation has a cycle");
        placed[*pick] = true;
        order.push_back(*pick);
    }
    return order;
}

bool is_partial_order(const Relation& rel) {
    const std::size_t n = rel.size();
    for (std::size_t p = 0; p < n; ++p) {
        if (!rel[p][p]) return false;
        for (std::size_t q = 0; q < n; ++q) {
            if (p != q && rel[p][q] && rel[q][p]) return false;
            if (!rel[p][q]) continue;
            for (std::size_t r = 0; r < n; ++r)
                if (rel[q][r] && !rel[p][r]) return false;
        }
    }
    return true;
}

class MatchingSearch {
public:
    MatchingSearch(const Graph& g, std::vector<VertexId> xs)
        : g_(g), xs_(std::move(xs)), used_(g.order(), false) {}

    std::optional<std::vector<VertexId>> run() {
        mate_.clear();
        if (extend()) return mate_;
        return std::nullopt;
    }

private:
    bool rel(std::size_t p, std::size_t q) const { return g_.adjacent(xs_[p], mate_[q]); }

    // Antisymmetry and transitivity on every triple that involves the pair
    // just added (index k).
    bool consistent(std::size_t k) const {
        for (std::size_t p = 0; p < k; ++p)
            if (rel(p, k) && rel(k, p)) return false;
        for (std::size_t p = 0; p <= k; ++p) {
            for (std::size_t q = 0; q <= k; ++q) {
                if (q == p || !rel(p, q)) continue;
                for (std::size_t r = 0; r <= k; ++r) {
                    if (r == q || r == p) continue;
                    if (p != k && q != k && r != k) continue;
                    if (rel(q, r) && !rel(p, r)) return false;
                }
            }
        }
        return true;
    }

    bool extend() {
        const std::size_t k = mate_.size();
        if (k == xs_.size()) return true;
        for (VertexId y : g_.neighbors(xs_[k])) {
            if (used_[y]) continue;
            used_[y] = true;
            mate_.push_back(y);
            if (consistent(k) && extend()) return true;
            mate_.pop_back();
            used_[y] = false;
        }
        return false;
    }

    const Graph& g_;
    std::vector<VertexId> xs_;
    std::vector<bool> used_;
    std::vector<VertexId> mate_;
};

} // namespace

const char* to_string(CMRejection r) {
    switch (r) {
    case CMRejection::none: return "none";
    case CMRejection::not_bipartite: return "not bipartite";
    case CMRejection::isolated_vertex: return "has an isolated vertex";
    case CMRejection::unequal_parts: return "parts have different sizes";
    case CMRejection::no_perfect_matching: return "no perfect matching";
    case CMRejection::no_poset_matching: return "no perfect matching induces a partial order";
    }
    return "unknown";
}

CMVerdict recognize_cm(const Graph& g) {
    CMVerdict verdict;
    auto parts = bipartition(g);
    if (!parts) {
        verdict.reason = CMRejection::not_bipartite;
        return verdict;
    }
    for (VertexId v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0) {
            verdict.reason = CMRejection::isolated_vertex;
            return verdict;
        }
    }
    if (parts->part_x.size() != parts->part_y.size()) {
        verdict.reason = CMRejection::unequal_parts;
        return verdict;
    }
    const std::size_t n = parts->part_x.size();
    if (matching_number(g) != n) {
        verdict.reason = CMRejection::no_perfect_matching;
        return verdict;
    }

    std::vector<VertexId> xs, ys;
    for (const auto& name : parts->part_x) xs.push_back(g.id(name));
    for (const auto& name : parts->part_y) ys.push_back(g.id(name));
    auto mate = MatchingSearch(g, xs).run();
    if (!mate) {
        verdict.reason = CMRejection::no_poset_matching;
        return verdict;
    }

    Relation rel(n, std::vector<bool>(n, false));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) rel[p][q] = g.adjacent(xs[p], (*mate)[q]);
    auto order = topological_order(rel, [&](std::size_t a, std::size_t b) {
        return g.name(xs[a]) < g.name(xs[b]);
    });

    CMLabeling labeling;
    std::vector<std::size_t> position(n);
    for (std::size_t k = 0; k < n; ++k) {
        position[order[k]] = k + 1;
        labeling.pairs.emplace_back(g.name(xs[order[k]]), g.name((*mate)[order[k]]));
    }
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (rel[p][q]) labeling.order_relation.emplace(position[p], position[q]);
    verdict.labeling = std::move(labeling);
    return verdict;
}

std::optional<CMLabeling> find_cm_labeling(const Graph& g) { return recognize_cm(g).labeling; }

bool is_cm_bipartite(const Graph& g) { return recognize_cm(g).is_cm(); }

bool is_valid_cm_labeling(const Graph& g, const CMLabeling& labeling) {
    const std::size_t n = labeling.size();
    if (g.order() != 2 * n) return false;
    constexpr std::size_t kNone = 0;
    std::vector<std::size_t> x_index(g.order(), kNone), y_index(g.order(), kNone);
    for (std::size_t k = 0; k < n; ++k) {
        auto x = g.find(labeling.pairs[k].first);
        auto y = g.find(labeling.pairs[k].second);
        if (!x || !y || x == y) return false;
        if (x_index[*x] || y_index[*x] || x_index[*y] || y_index[*y]) return false;
        x_index[*x] = k + 1;
        y_index[*y] = k + 1;
    }
    // Edges and relation pairs must coincide.
    std::size_t matched = 0;
    for (const Edge& e : g.edges()) {
        std::size_t i = 0, j = 0;
        if (x_index[e.a] && y_index[e.b]) {
            i = x_index[e.a];
            j = y_index[e.b];
        } else if (x_index[e.b] && y_index[e.a]) {
            i = x_index[e.b];
            j = y_index[e.a];
        } else {
            return false;
        }
        if (!labeling.order_relation.contains({i, j})) return false;
        ++matched;
    }
    if (matched != labeling.order_relation.size()) return false;

    const auto& rel = labeling.order_relation;
    for (std::size_t i = 1; i <= n; ++i)
        if (!rel.contains({i, i})) return false;
    for (const auto& [i, j] : rel) {
        if (i > j) return false;
        for (std::size_t k = j + 1; k <= n; ++k)
            if (i < j && rel.contains({j, k}) && !rel.contains({i, k})) return false;
    }
    return true;
}

Graph poset_to_graph(std::size_t n, const OrderRelation& relation) {
    Relation rel(n, std::vector<bool>(n, false));
    for (const auto& [i, j] : relation) {
        if (i < 1 || j < 1 || i > n || j > n)
            throw PreconditionError("relation pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                    ") outside [1, " + std::to_string(n) + "]");
        rel[i - 1][j - 1] = true;
    }
    if (!is_partial_order(rel)) throw PreconditionError("relation is not a partial order");

    auto order = topological_order(rel, [](std::size_t a, std::size_t b) { return a < b; });
    std::vector<std::size_t> position(n);
    for (std::size_t k = 0; k < n; ++k) position[order[k]] = k;

    std::vector<std::string> names;
    for (std::size_t k = 1; k <= n; ++k) names.push_back("x" + std::to_string(k));
    for (std::size_t k = 1; k <= n; ++k) names.push_back("y" + std::to_string(k));
    std::vector<Edge> edges;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (rel[p][q])
                edges.push_back(Edge{static_cast<VertexId>(position[p]), static_cast<VertexId>(n + position[q])});
    return Graph::from_ids(std::move(names), edges);
}

double unit_uniform(std::uint64_t raw) { return static_cast<double>(raw >> 11) * 0x1.0p-53; }

Graph random_cm_graph(std::size_t n_pairs, double density, std::uint64_t seed) {
    if (n_pairs < 1) throw PreconditionError("n_pairs must be at least 1");
    if (!(density >= 0.0 && density <= 1.0)) throw PreconditionError("density must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    Relation rel(n_pairs, std::vector<bool>(n_pairs, false));
    for (std::size_t i = 0; i < n_pairs; ++i) {
        rel[i][i] = true;
        for (std::size_t j = i + 1; j < n_pairs; ++j) rel[i][j] = unit_uniform(rng()) < density;
    }
    // Forward edges only, so closing in index order is enough.
    for (std::size_t k = 0; k < n_pairs; ++k)
        for (std::size_t i = 0; i < n_pairs; ++i)
            if (rel[i][k])
                for (std::size_t j = 0; j < n_pairs; ++j)
                    if (rel[k][j]) rel[i][j] = true;

    OrderRelation relation;
    for (std::size_t i = 0; i < n_pairs; ++i)
        for (std::size_t j = 0; j < n_pairs; ++j)
            if (rel[i][j]) relation.emplace(i + 1, j + 1);
    return poset_to_graph(n_pairs, relation);
}

} // namespace eideal
