// Brute-force reference implementations used only by the tests. Everything
// here enumerates subsets directly and shares no code with the library's
// pruned searches.
#ifndef EIDEAL_TESTS_BRUTE_HPP
#define EIDEAL_TESTS_BRUTE_HPP

#include "eideal/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace brute {

using eideal::Graph;
using eideal::VertexId;

inline bool is_matching(const Graph& g, std::uint64_t edge_set) {
    std::uint64_t used = 0;
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (!(edge_set >> k & 1)) continue;
        const auto& e = g.edges()[k];
        const std::uint64_t ends = (std::uint64_t{1} << e.a) | (std::uint64_t{1} << e.b);
        if (used & ends) return false;
        used |= ends;
    }
    return true;
}

inline std::uint64_t covered(const Graph& g, std::uint64_t edge_set) {
    std::uint64_t used = 0;
    for (std::size_t k = 0; k < g.size(); ++k)
        if (edge_set >> k & 1) used |= (std::uint64_t{1} << g.edges()[k].a) | (std::uint64_t{1} << g.edges()[k].b);
    return used;
}

inline bool is_maximal_matching(const Graph& g, std::uint64_t edge_set) {
    if (!is_matching(g, edge_set)) return false;
    const std::uint64_t used = covered(g, edge_set);
    for (const auto& e : g.edges())
        if (!(used >> e.a & 1) && !(used >> e.b & 1)) return false;
    return true;
}

inline bool is_induced_matching(const Graph& g, std::uint64_t edge_set) {
    if (!is_matching(g, edge_set)) return false;
    const std::uint64_t used = covered(g, edge_set);
    std::size_t inside = 0;
    for (const auto& e : g.edges())
        if ((used >> e.a & 1) && (used >> e.b & 1)) ++inside;
    return inside == static_cast<std::size_t>(__builtin_popcountll(edge_set));
}

template <typename Pred>
std::size_t best_edge_subset(const Graph& g, Pred pred, bool maximize) {
    std::size_t best = maximize ? 0 : g.size() + 1;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.size()); ++s) {
        if (!pred(g, s)) continue;
        const auto k = static_cast<std::size_t>(__builtin_popcountll(s));
        best = maximize ? std::max(best, k) : std::min(best, k);
    }
    return best;
}

inline std::size_t alpha(const Graph& g) { return best_edge_subset(g, is_matching, true); }
inline std::size_t beta(const Graph& g) { return best_edge_subset(g, is_maximal_matching, false); }
inline std::size_t theta(const Graph& g) { return best_edge_subset(g, is_induced_matching, true); }

inline bool independent(const Graph& g, std::uint64_t s) {
    for (const auto& e : g.edges())
        if ((s >> e.a & 1) && (s >> e.b & 1)) return false;
    return true;
}

inline std::size_t indep(const Graph& g) {
    std::size_t best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s)
        if (independent(g, s)) best = std::max(best, static_cast<std::size_t>(__builtin_popcountll(s)));
    return best;
}

inline std::size_t gamma(const Graph& g) {
    std::vector<std::uint64_t> closed(g.order());
    for (VertexId v = 0; v < g.order(); ++v) {
        closed[v] = std::uint64_t{1} << v;
        for (VertexId w : g.neighbors(v)) closed[v] |= std::uint64_t{1} << w;
    }
    std::size_t best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
        std::uint64_t seen = 0;
        bool ok = true;
        for (VertexId v = 0; v < g.order() && ok; ++v) {
            if (!(s >> v & 1)) continue;
            if (seen & closed[v]) ok = false;
            seen |= closed[v];
        }
        if (ok) best = std::max(best, static_cast<std::size_t>(__builtin_popcountll(s)));
    }
    return best;
}

/// Isomorphism by trying every bijection, pruned on adjacency.
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    const std::size_t n = a.order();
    std::vector<std::size_t> da(n), db(n);
    for (VertexId v = 0; v < n; ++v) {
        da[v] = a.degree(v);
        db[v] = b.degree(v);
    }
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<VertexId> image(n);
    std::vector<bool> used(n, false);
    auto extend = [&](auto&& self, VertexId v) -> bool {
        if (v == n) return true;
        for (VertexId w = 0; w < n; ++w) {
            if (used[w] || da[v] != db[w]) continue;
            bool ok = true;
            for (VertexId p = 0; p < v && ok; ++p) ok = a.adjacent(v, p) == b.adjacent(w, image[p]);
            if (!ok) continue;
            used[w] = true;
            image[v] = w;
            if (self(self, v + 1)) return true;
            used[w] = false;
        }
        return false;
    };
    return extend(extend, 0);
}

/// Rank over Q by Gaussian elimination on exact rationals.
inline std::size_t rational_rank(std::vector<std::vector<long long>> rows_in) {
    using Q = boost::multiprecision::cpp_rational;
    std::vector<std::vector<Q>> m;
    for (const auto& r : rows_in) {
        std::vector<Q> row;
        for (long long x : r) row.emplace_back(x);
        m.push_back(std::move(row));
    }
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][c] == 0) continue;
            Q f = m[i][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Erdos-Renyi graph with names n1..nk.
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("n" + std::to_string(i + 1));
    std::vector<eideal::Edge> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            if (coin(rng) < p) edges.push_back({a, b});
    return Graph::from_ids(std::move(names), edges);
}

/// Random bipartite graph on parts of the given sizes.
inline Graph random_bipartite(std::size_t left, std::size_t right, double p, std::mt19937_64& rng) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < left; ++i) names.push_back("l" + std::to_string(i + 1));
    for (std::size_t i = 0; i < right; ++i) names.push_back("r" + std::to_string(i + 1));
    std::vector<eideal::Edge> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (VertexId a = 0; a < left; ++a)
        for (VertexId b = 0; b < right; ++b)
            if (coin(rng) < p) edges.push_back({a, static_cast<VertexId>(left + b)});
    return Graph::from_ids(std::move(names), edges);
}

} // namespace brute

#endif // EIDEAL_TESTS_BRUTE_HPP
