#ifndef EIDEAL_HOMOLOGY_HPP
#define EIDEAL_HOMOLOGY_HPP

#include "eideal/exact_rank.hpp"
#include "eideal/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace eideal {

/// A face is a set of ground-set positions, bit k standing for ground[k].
using Face = std::uint64_t;

/**
 * Finite simplicial complex over an ordered ground set.
 *
 * `faces[d + 1]` holds the faces of dimension d, so `faces[0]` is always
 * {empty face}. Within a dimension faces are sorted lexicographically as
 * increasing position tuples.
 */
struct SimplicialComplex {
    std::vector<std::string> ground;
    std::vector<std::vector<Face>> faces;

    /// Largest face dimension; -1 for the complex {empty face}.
    int dimension() const noexcept { return static_cast<int>(faces.size()) - 2; }
    std::size_t face_count() const;
    bool contains(Face f) const;
};

/// Lexicographic order on sorted position tuples of equal length.
bool face_less(Face a, Face b);

/// Increasing ground positions of a face.
std::vector<std::size_t> face_vertices(Face f);

/// Boundary map from dimension-d faces to dimension-(d-1) faces, d >= 0.
/// Rows index faces[d], columns faces[d + 1]; deleting the k-th smallest
/// vertex contributes sign (-1)^k.
SparseIntMatrix boundary_matrix(const SimplicialComplex& c, int d);

/// Ranks of reduced homology: result[d + 1] = rank H~_d for d = -1..dim.
std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& c,
                                                const RankField& field = RankField::rationals());

/// sum_d (-1)^d f_d  ==  sum_d (-1)^d rank H~_d, both sums including d = -1.
bool euler_characteristic_consistent(const SimplicialComplex& c, const std::vector<std::size_t>& ranks);

inline constexpr std::size_t kDefaultOracleCap = 16;
/// Hard ceiling for the oracle regardless of configuration.
inline constexpr std::size_t kOracleHardCap = 40;

struct OracleOptions {
    std::size_t max_vertices = kDefaultOracleCap;
    RankField field = RankField::rationals();
    /// Skip subsets W where G[W] has an isolated vertex: the complex is then
    /// a cone and has no reduced homology.
    bool skip_cones = true;
    /// Re-check the Euler characteristic of every complex whose homology is
    /// computed.
    bool check_euler = false;
};

/// Independence complex: all independent vertex sets of g.
/// Throws CapExceeded when g has more than `max_vertices` vertices.
SimplicialComplex independence_complex(const Graph& g, std::size_t max_vertices = kDefaultOracleCap);

/// Graded Betti numbers beta_{i,j} of S/I_G. Only nonzero entries are stored.
class BettiTable {
public:
    BettiTable() = default;
    explicit BettiTable(std::size_t variables) : variables_(variables) {}

    void add(int i, int j, std::uint64_t value);
    std::uint64_t at(int i, int j) const;
    const std::map<std::pair<int, int>, std::uint64_t>& entries() const noexcept { return entries_; }
    std::size_t variables() const noexcept { return variables_; }

    /// max{i : beta_{i,j} != 0}
    std::size_t projective_dimension() const;
    /// max{j - i : beta_{i,j} != 0}
    std::size_t regularity() const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    std::size_t variables_ = 0;
    std::map<std::pair<int, int>, std::uint64_t> entries_;
};

/// Sorted array of [i, j, beta] triples.
std::string betti_to_json(const BettiTable& table);

struct HochsterRun {
    BettiTable table;
    std::size_t complexes = 0;          // complexes whose homology was computed
    std::size_t euler_violations = 0;   // only counted with check_euler
};

/// Hochster's formula: beta_{i,j} = sum over |W| = j of rank H~_{j-i-1} of
/// the independence complex of G[W], scanning all 2^n vertex subsets. The
/// empty subset supplies beta_{0,0} = 1.
HochsterRun hochster_run(const Graph& g, const OracleOptions& options = {});
BettiTable hochster_betti(const Graph& g, const OracleOptions& options = {});

struct OracleValues {
    std::size_t depth = 0;
    std::size_t reg = 0;
    std::size_t pd = 0;
    std::size_t dim = 0;
};

/// pd and reg read off the Betti table, depth = n - pd, dim = independence
/// number.
OracleValues oracle_values(const BettiTable& table, const Graph& g);
OracleValues oracle_values(const Graph& g, const OracleOptions& options = {});

} // namespace eideal

#endif // EIDEAL_HOMOLOGY_HPP
