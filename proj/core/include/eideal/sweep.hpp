#ifndef EIDEAL_SWEEP_HPP
#define EIDEAL_SWEEP_HPP

#include "eideal/formulas.hpp"
#include "eideal/graph.hpp"
#include "eideal/homology.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eideal {

/// Closed forms that a sweep can check against the homology oracle.
enum class Theorem { cm_values, leaf, circ, star, pendant };

const char* to_string(Theorem t);
std::optional<Theorem> parse_theorem(std::string_view name);

struct SweepOptions {
    Theorem theorem = Theorem::cm_values;
    std::size_t trials = 100;
    std::size_t max_pairs = 6;
    std::uint64_t seed = 1;
    OracleOptions oracle;
    Verification verification = Verification::check;
};

/// Largest operand size (in pairs) whose composite still fits under `cap`.
std::size_t max_pairs_within_cap(Theorem t, std::size_t cap);

struct Trial {
    std::size_t index = 0;
    std::string description;     // operands and leaves used
    Graph graph;                 // the graph handed to the oracle
    AlgebraicValues formula;
    OracleValues oracle;
    bool reg_checked = true;     // the pendant closed form predicts depth only

    bool depth_ok() const { return formula.depth == oracle.depth; }
    bool reg_ok() const { return !reg_checked || formula.reg == oracle.reg; }
    bool passed() const { return depth_ok() && reg_ok(); }
};

struct SweepSummary {
    Theorem theorem = Theorem::cm_values;
    std::size_t effective_max_pairs = 0;
    std::vector<Trial> trials;

    std::size_t passed() const;
    std::size_t failed() const { return trials.size() - passed(); }
    const Trial* first_counterexample() const;
};

/// One trial, fully determined by (options, index).
Trial run_trial(const SweepOptions& options, std::size_t index, std::uint64_t trial_seed);

/// Deterministic for a fixed seed: trial k uses the k-th output of
/// mt19937_64(seed) as its own seed.
SweepSummary run_sweep(const SweepOptions& options);

} // namespace eideal

#endif // EIDEAL_SWEEP_HPP
