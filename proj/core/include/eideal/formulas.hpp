#ifndef EIDEAL_FORMULAS_HPP
#define EIDEAL_FORMULAS_HPP

#include "eideal/graph.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace eideal {

/// depth and Castelnuovo-Mumford regularity of S/I_G, plus which closed form
/// produced them.
struct AlgebraicValues {
    std::size_t depth = 0;
    std::size_t reg = 0;
    std::string provenance;

    friend bool operator==(const AlgebraicValues&, const AlgebraicValues&) = default;
};

/// Whether evaluators re-run Cohen-Macaulay recognition on their operands.
enum class Verification { check, trusted };

// Provenance tags.
inline constexpr std::string_view kCmValues = "cm-bipartite";
inline constexpr std::string_view kPathValues = "path";
inline constexpr std::string_view kLeafDelete = "leaf-delete";
inline constexpr std::string_view kCircValues = "circ";
inline constexpr std::string_view kStarValues = "star";
inline constexpr std::string_view kPendantDepth = "pendant";

/// Cohen-Macaulay bipartite g: depth |V|/2, reg = induced matching number.
AlgebraicValues cm_values(const Graph& g, Verification v = Verification::check);

/// Path on n >= 2 vertices: depth ceil(n/3), reg floor((n+1)/3).
AlgebraicValues path_values(std::size_t n);

/// g Cohen-Macaulay bipartite, u a leaf with support v. Values for g - u:
///   depth = depth(g) - 1 if deg(v) >= 2, else depth(g)
///   reg   = reg(g) - s, s = 0 iff theta(g - v) == theta(g)
AlgebraicValues leaf_delete_values(const Graph& g, std::string_view u, Verification v = Verification::check);

/// Values of (g1, u1) o (g2, u2) from the operands:
///   depth = d1 + d2 - s, s = 1 if both supports have degree 1, else 2
///   reg   = r1 + r2 - t, t = #{i : theta(g_i - v_i) != theta(g_i)}
AlgebraicValues circ_values(const Graph& g1, std::string_view u1, const Graph& g2, std::string_view u2,
                            Verification v = Verification::check);

/// Values of (g1, u1) * (g2, u2):
///   depth = d1 + d2 - 1
///   reg   = r1 + r2 - (t == 2 ? 1 : 0), t as for circ_values
AlgebraicValues star_values(const Graph& g1, std::string_view u1, const Graph& g2, std::string_view u2,
                            Verification v = Verification::check);

/// Depth after hanging a new pendant vertex on the leaf u of g1: unchanged.
std::size_t clique_sum_p2_depth(const Graph& g1, std::string_view u, Verification v = Verification::check);

/// 1 when deleting the support v of leaf u drops the induced matching
/// number, 0 otherwise.
std::size_t theta_drop(const Graph& g, std::string_view u);

} // namespace eideal

#endif // EIDEAL_FORMULAS_HPP
