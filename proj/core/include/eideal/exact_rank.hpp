#ifndef EIDEAL_EXACT_RANK_HPP
#define EIDEAL_EXACT_RANK_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace eideal {

/// Integer matrix stored by columns; each column is a list of
/// (row, value) entries sorted by row with no zero values.
class SparseIntMatrix {
public:
    using Entry = std::pair<std::uint32_t, std::int64_t>;
    using Column = std::vector<Entry>;

    SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }

    /// Entries must be pushed in increasing row order per column.
    void push(std::size_t col, std::uint32_t row, std::int64_t value);

    const Column& column(std::size_t c) const { return columns_.at(c); }
    std::int64_t at(std::size_t row, std::size_t col) const;

private:
    std::size_t rows_;
    std::vector<Column> columns_;
};

/// Coefficients used for rank computation. `rational` is exact over Q;
/// `prime` reduces modulo `prime` and is meant for cross-checks only.
struct RankField {
    enum class Kind { rational, prime };
    Kind kind = Kind::rational;
    std::uint64_t prime = 2147483647;

    static RankField rationals() { return {}; }
    static RankField modulo(std::uint64_t p) { return {Kind::prime, p}; }
};

/// Rank over Q. Sparse fraction-free column reduction in 64-bit integers;
/// falls back to dense Bareiss elimination over GMP integers if an entry
/// would overflow.
std::size_t rank_rational(const SparseIntMatrix& m);

/// Sparse 64-bit column reduction; empty on overflow.
std::optional<std::size_t> rank_rational_int64(const SparseIntMatrix& m);

/// Dense Bareiss elimination with arbitrary-precision integers.
std::size_t rank_bareiss(const SparseIntMatrix& m);

/// Rank over Z/p; p must be prime and below 2^32.
std::size_t rank_mod_prime(const SparseIntMatrix& m, std::uint64_t p);

std::size_t rank(const SparseIntMatrix& m, const RankField& field);

} // namespace eideal

#endif // EIDEAL_EXACT_RANK_HPP
