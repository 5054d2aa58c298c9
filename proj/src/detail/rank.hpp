#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace purebetti::detail {

// One sparse column: (row, value) pairs by ascending row.
using IntColumn = std::vector<std::pair<std::uint32_t, std::int64_t>>;

// Rank over GF(p) of the given columns (entries already reduced mod p).
std::size_t rank_mod_p(std::vector<IntColumn> cols, std::size_t rows, std::uint32_t p);

// Rank over Q. Uses checked 64-bit fraction-free elimination and restarts
// with arbitrary precision on overflow.
std::size_t rank_rational(std::vector<IntColumn> cols, std::size_t rows);

// Pivot rows of the reduced columns, reported alongside the rank so that
// callers can skip columns of the next boundary map known to vanish.
struct RankResult {
    std::size_t rank = 0;
    std::vector<std::uint32_t> pivot_rows;
};
RankResult rank_with_pivots(std::vector<IntColumn> cols, std::size_t rows, bool rational, std::uint32_t p);

}  // namespace purebetti::detail
