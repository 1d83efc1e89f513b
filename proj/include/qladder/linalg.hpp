#pragma once

#include <gmpxx.h>

#include <atomic>
#include <cstdint>
#include <map>
#include <vector>

namespace qladder {

/// Sparse rational row vector: (column, value), columns strictly increasing,
/// values nonzero.
using RowQ = std::vector<std::pair<int, mpq_class>>;

/// Tallies for the rank-certification machinery, accumulated process-wide.
/// Every elimination bumps `computations`; `prime_agreements` counts the
/// dual-prime consistency checks that passed, `retries` the prime rotations
/// after a disagreement, `fallbacks` the full exact eliminations forced.
struct RankStats {
    std::atomic<std::uint64_t> computations{0};
    std::atomic<std::uint64_t> prime_agreements{0};
    std::atomic<std::uint64_t> retries{0};
    std::atomic<std::uint64_t> fallbacks{0};
};
RankStats& rank_stats();

/// Reduced row echelon form over the rationals: leading coefficients 1,
/// leading columns strictly increasing, pivot columns eliminated from every
/// other row.
struct RrefQ {
    int width = 0;
    std::vector<RowQ> rows;
    std::vector<int> pivots;  // lead column of each row

    int rank() const { return static_cast<int>(rows.size()); }
    bool is_pivot(int col) const;

    /// Subtract pivot-row multiples until the vector is supported on
    /// non-pivot columns only.
    void reduce(std::map<int, mpq_class>& vec) const;
};

/// Row space of `rows`, certified: rows are preselected by elimination
/// modulo a word-size prime, the selected rows are put in exact rational
/// RREF, and the rank is recomputed modulo a second, independent prime.
/// All three ranks must agree; on disagreement the computation retries with
/// fresh primes and finally falls back to exact elimination of every row.
/// A row selected mod p is independent over Q, so the certified risk is
/// confined to both primes simultaneously hiding a dependent-looking row
/// that is independent over Q.
RrefQ certified_rref(const std::vector<RowQ>& rows, int width);

/// Rank alone, same certification, without the exact phase when the matrix
/// has full column rank mod both primes (rank_p <= rank_Q <= width forces
/// equality, so that shortcut is exact).
int certified_rank(const std::vector<RowQ>& rows, int width);

}  // namespace qladder
