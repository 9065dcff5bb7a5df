#include "eideal/homology.hpp"

#include "eideal/errors.hpp"
#include "eideal/invariants.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

namespace eideal {

namespace {

constexpr Face bit(std::size_t k) { return Face{1} << k; }

// Independent subsets of `within`, grouped by size. Depth-first generation in
// increasing vertex order yields each size class in lexicographic order.
std::vector<std::vector<Face>> independent_faces(const std::vector<VertexMask>& adj, VertexMask within) {
    std::vector<std::vector<Face>> faces(1, std::vector<Face>{0});
    std::vector<std::size_t> members;
    for (VertexMask m = within; m; m &= m - 1) members.push_back(static_cast<std::size_t>(std::countr_zero(m)));

    auto visit = [&](auto&& self, std::size_t start, Face face, VertexMask blocked, std::size_t size) -> void {
        for (std::size_t k = start; k < members.size(); ++k) {
            const std::size_t v = members[k];
            if (blocked & bit(v)) continue;
            const Face next = face | bit(v);
            if (faces.size() <= size + 1) faces.emplace_back();
            faces[size + 1].push_back(next);
            self(self, k + 1, next, blocked | adj[v], size + 1);
        }
    };
    visit(visit, 0, 0, 0, 0);
    return faces;
}

SparseIntMatrix boundary_of(const std::vector<std::vector<Face>>& faces, int d) {
    // Rows: dimension d-1 faces (faces[d]); columns: dimension d (faces[d+1]).
    const auto& lower = faces.at(static_cast<std::size_t>(d));
    const auto& upper = faces.at(static_cast<std::size_t>(d) + 1);
    std::unordered_map<Face, std::uint32_t> row_of;
    row_of.reserve(lower.size() * 2);
    for (std::uint32_t r = 0; r < lower.size(); ++r) row_of.emplace(lower[r], r);

    SparseIntMatrix m(lower.size(), upper.size());
    std::vector<std::pair<std::uint32_t, std::int64_t>> entries;
    for (std::size_t c = 0; c < upper.size(); ++c) {
        entries.clear();
        int k = 0;
        for (Face rest = upper[c]; rest; rest &= rest - 1, ++k) {
            const Face sub = upper[c] & ~(rest & -rest);
            entries.emplace_back(row_of.at(sub), (k % 2 == 0) ? 1 : -1);
        }
        std::sort(entries.begin(), entries.end());
        for (const auto& [row, v] : entries) m.push(c, row, v);
    }
    return m;
}

std::vector<std::size_t> homology_of(const std::vector<std::vector<Face>>& faces, const RankField& field) {
    const int top = static_cast<int>(faces.size()) - 2; // largest dimension
    // boundary_rank[d] = rank of the boundary from dimension d, d = 0..top.
    std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(top + 2), 0);
    for (int d = 0; d <= top; ++d) boundary_rank[static_cast<std::size_t>(d)] = rank(boundary_of(faces, d), field);

    std::vector<std::size_t> ranks(faces.size(), 0);
    for (int d = -1; d <= top; ++d) {
        const std::size_t f = faces[static_cast<std::size_t>(d + 1)].size();
        const std::size_t in = d >= 0 ? boundary_rank[static_cast<std::size_t>(d)] : 0;
        const std::size_t out = d + 1 <= top ? boundary_rank[static_cast<std::size_t>(d + 1)] : 0;
        ranks[static_cast<std::size_t>(d + 1)] = f - in - out;
    }
    return ranks;
}

bool euler_consistent(const std::vector<std::vector<Face>>& faces, const std::vector<std::size_t>& ranks) {
    long long lhs = 0, rhs = 0;
    for (std::size_t k = 0; k < faces.size(); ++k) {
        const long long sign = (k % 2 == 0) ? -1 : 1; // k = d + 1
        lhs += sign * static_cast<long long>(faces[k].size());
    }
    for (std::size_t k = 0; k < ranks.size(); ++k) {
        const long long sign = (k % 2 == 0) ? -1 : 1;
        rhs += sign * static_cast<long long>(ranks[k]);
    }
    return lhs == rhs;
}

void check_cap(const Graph& g, std::size_t max_vertices) {
    const std::size_t cap = std::min(max_vertices, kOracleHardCap);
    if (g.order() > cap) throw CapExceeded(g.order(), cap);
}

} // namespace

std::size_t SimplicialComplex::face_count() const {
    std::size_t n = 0;
    for (const auto& level : faces) n += level.size();
    return n;
}

bool SimplicialComplex::contains(Face f) const {
    const auto k = static_cast<std::size_t>(std::popcount(f));
    if (k >= faces.size()) return false;
    return std::binary_search(faces[k].begin(), faces[k].end(), f, face_less);
}

bool face_less(Face a, Face b) {
    const Face diff = a ^ b;
    if (diff == 0) return false;
    return (a & diff & -diff) != 0;
}

std::vector<std::size_t> face_vertices(Face f) {
    std::vector<std::size_t> out;
    for (; f; f &= f - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(f)));
    return out;
}

SparseIntMatrix boundary_matrix(const SimplicialComplex& c, int d) {
    if (d < 0 || d > c.dimension()) throw std::out_of_range("boundary dimension out of range");
    return boundary_of(c.faces, d);
}

std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& c, const RankField& field) {
    return homology_of(c.faces, field);
}

bool euler_characteristic_consistent(const SimplicialComplex& c, const std::vector<std::size_t>& ranks) {
    return euler_consistent(c.faces, ranks);
}

SimplicialComplex independence_complex(const Graph& g, std::size_t max_vertices) {
    check_cap(g, max_vertices);
    SimplicialComplex c;
    c.ground = g.names();
    const VertexMask all = g.order() == 64 ? ~VertexMask{0} : (VertexMask{1} << g.order()) - 1;
    c.faces = independent_faces(g.adjacency_masks(), all);
    return c;
}

// ---------------------------------------------------------------------------
// Betti tables
// ---------------------------------------------------------------------------

void BettiTable::add(int i, int j, std::uint64_t value) {
    if (value == 0) return;
    entries_[{i, j}] += value;
}

std::uint64_t BettiTable::at(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

std::size_t BettiTable::projective_dimension() const {
    int pd = 0;
    for (const auto& [key, value] : entries_) pd = std::max(pd, key.first);
    return static_cast<std::size_t>(pd);
}

std::size_t BettiTable::regularity() const {
    int reg = 0;
    for (const auto& [key, value] : entries_) reg = std::max(reg, key.second - key.first);
    return static_cast<std::size_t>(reg);
}

std::string betti_to_json(const BettiTable& table) {
    std::ostringstream out;
    out << '[';
    bool first = true;
    for (const auto& [key, value] : table.entries()) {
        if (!first) out << ',';
        first = false;
        out << '[' << key.first << ',' << key.second << ',' << value << ']';
    }
    out << ']';
    return out.str();
}

HochsterRun hochster_run(const Graph& g, const OracleOptions& options) {
    check_cap(g, options.max_vertices);
    HochsterRun run{BettiTable(g.order()), 0, 0};
    const auto adj = g.adjacency_masks();
    const std::uint64_t subsets = std::uint64_t{1} << g.order();

    for (std::uint64_t w = 0; w < subsets; ++w) {
        if (options.skip_cones && w != 0) {
            bool cone = false;
            for (VertexMask m = w; m && !cone; m &= m - 1)
                cone = (adj[static_cast<std::size_t>(std::countr_zero(m))] & w) == 0;
            if (cone) continue;
        }
        const auto faces = independent_faces(adj, w);
        const auto ranks = homology_of(faces, options.field);
        ++run.complexes;
        if (options.check_euler && !euler_consistent(faces, ranks)) ++run.euler_violations;

        const int j = std::popcount(w);
        for (std::size_t k = 0; k < ranks.size(); ++k) {
            const int d = static_cast<int>(k) - 1;
            run.table.add(j - d - 1, j, ranks[k]);
        }
    }
    return run;
}

BettiTable hochster_betti(const Graph& g, const OracleOptions& options) { return hochster_run(g, options).table; }

OracleValues oracle_values(const BettiTable& table, const Graph& g) {
    OracleValues v;
    v.pd = table.projective_dimension();
    v.depth = g.order() - v.pd;
    v.reg = table.regularity();
    v.dim = independence_and_cover(g).indep;
    return v;
}

OracleValues oracle_values(const Graph& g, const OracleOptions& options) {
    return oracle_values(hochster_betti(g, options), g);
}

} // namespace eideal
