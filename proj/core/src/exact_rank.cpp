#include "eideal/exact_rank.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace eideal {

void SparseIntMatrix::push(std::size_t col, std::uint32_t row, std::int64_t value) {
    if (row >= rows_) throw std::out_of_range("row out of range");
    if (value == 0) return;
    auto& c = columns_.at(col);
    if (!c.empty() && c.back().first >= row) throw std::invalid_argument("rows must be pushed in increasing order");
    c.emplace_back(row, value);
}

std::int64_t SparseIntMatrix::at(std::size_t row, std::size_t col) const {
    const auto& c = columns_.at(col);
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, std::size_t r) { return e.first < r; });
    return it != c.end() && it->first == row ? it->second : 0;
}

namespace {

using Column = SparseIntMatrix::Column;

// out = alpha * lhs - beta * rhs, dropping zeros. False on overflow.
bool combine(const Column& lhs, std::int64_t alpha, const Column& rhs, std::int64_t beta, Column& out) {
    out.clear();
    std::size_t i = 0, j = 0;
    while (i < lhs.size() || j < rhs.size()) {
        std::uint32_t row;
        std::int64_t a = 0, b = 0;
        if (j == rhs.size() || (i < lhs.size() && lhs[i].first < rhs[j].first)) {
            row = lhs[i].first;
            a = lhs[i++].second;
        } else if (i == lhs.size() || rhs[j].first < lhs[i].first) {
            row = rhs[j].first;
            b = rhs[j++].second;
        } else {
            row = lhs[i].first;
            a = lhs[i++].second;
            b = rhs[j++].second;
        }
        std::int64_t pa = 0, pb = 0, v = 0;
        if (__builtin_mul_overflow(a, alpha, &pa) || __builtin_mul_overflow(b, beta, &pb) ||
            __builtin_sub_overflow(pa, pb, &v))
            return false;
        if (v != 0) out.emplace_back(row, v);
    }
    return true;
}

void divide_content(Column& c) {
    std::int64_t g = 0;
    for (const auto& [row, v] : c) {
        g = std::gcd(g, v);
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& e : c) e.second /= g;
}

std::uint64_t reduce_mod(std::int64_t v, std::uint64_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1;
    base %= p;
    while (exp) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

} // namespace

std::optional<std::size_t> rank_rational_int64(const SparseIntMatrix& m) {
    // Column reduction keyed on the largest nonzero row. Every step replaces
    // a column by a nonzero multiple of itself minus a multiple of another,
    // which leaves the rank over Q unchanged.
    std::vector<Column> reduced;
    reduced.reserve(m.cols());
    std::unordered_map<std::uint32_t, std::size_t> pivot_of_row;
    Column scratch;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        Column col = m.column(c);
        divide_content(col);
        while (!col.empty()) {
            auto hit = pivot_of_row.find(col.back().first);
            if (hit == pivot_of_row.end()) break;
            const Column& other = reduced[hit->second];
            const std::int64_t a = col.back().second;
            const std::int64_t b = other.back().second;
            const std::int64_t g = std::gcd(a, b);
            if (!combine(col, b / g, other, a / g, scratch)) return std::nullopt;
            col.swap(scratch);
            divide_content(col);
        }
        if (!col.empty()) {
            pivot_of_row.emplace(col.back().first, reduced.size());
            ++rank;
        }
        reduced.push_back(std::move(col));
    }
    return rank;
}

std::size_t rank_bareiss(const SparseIntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t c = 0; c < cols; ++c)
        for (const auto& [row, v] : m.column(c)) a[row][c] = static_cast<long>(v);

    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

std::size_t rank_rational(const SparseIntMatrix& m) {
    if (auto r = rank_rational_int64(m)) return *r;
    return rank_bareiss(m);
}

std::size_t rank_mod_prime(const SparseIntMatrix& m, std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t{1} << 32)) throw std::invalid_argument("prime must lie in [2, 2^32)");
    using ModColumn = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
    std::vector<ModColumn> reduced;
    std::unordered_map<std::uint32_t, std::size_t> pivot_of_row;
    ModColumn scratch;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        ModColumn col;
        for (const auto& [row, v] : m.column(c))
            if (auto r = reduce_mod(v, p)) col.emplace_back(row, r);
        while (!col.empty()) {
            auto hit = pivot_of_row.find(col.back().first);
            if (hit == pivot_of_row.end()) break;
            const ModColumn& other = reduced[hit->second];
            // col -= factor * other, with other's pivot normalised to 1.
            const std::uint64_t factor = col.back().second;
            scratch.clear();
            std::size_t i = 0, j = 0;
            while (i < col.size() || j < other.size()) {
                if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
                    scratch.push_back(col[i++]);
                } else if (i == col.size() || other[j].first < col[i].first) {
                    scratch.emplace_back(other[j].first, (p - factor * other[j].second % p) % p);
                    ++j;
                } else {
                    std::uint64_t v = (col[i].second + p - factor * other[j].second % p) % p;
                    if (v) scratch.emplace_back(col[i].first, v);
                    ++i;
                    ++j;
                }
            }
            col.swap(scratch);
        }
        if (!col.empty()) {
            const std::uint64_t inv = pow_mod(col.back().second, p - 2, p);
            for (auto& e : col) e.second = e.second * inv % p;
            pivot_of_row.emplace(col.back().first, reduced.size());
            ++rank;
        }
        reduced.push_back(std::move(col));
    }
    return rank;
}

std::size_t rank(const SparseIntMatrix& m, const RankField& field) {
    return field.kind == RankField::Kind::rational ? rank_rational(m) : rank_mod_prime(m, field.prime);
}

} // namespace eideal
