#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qladder/laurent.hpp"

namespace qladder {

/// A finite graph whose vertices sit on (column, row) coordinates, with
/// edges only inside a column or between adjacent columns. Independent sets
/// of vertices ("particle arrangements") are the configuration spaces here.
struct LatticeModel {
    std::string name;
    std::vector<std::pair<int, int>> vertices;  // (column, row), sorted
    std::vector<std::pair<int, int>> edges;     // vertex indices, i < j

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int vertex_index(int column, int row) const;  // -1 if absent
    std::vector<int> columns() const;             // distinct columns, ascending

    /// Square ladder with the diagonal interaction: rows x,y; edges
    /// x_i - y_j for |i-j| <= 1 and nothing else. Columns centered at 0.
    static LatticeModel twisted_square(int n);
    /// Plain square ladder: rungs x_i - y_i plus both rails.
    static LatticeModel square(int n);
    /// Three-row cyclic ladder: same-column triangles, same-row rails, and
    /// the cyclic diagonals x->y, y->z, z->x into the next column.
    static LatticeModel cyclic_tri3(int n);
    /// m-row ladder, n columns: path edges inside each column and cross
    /// edges (c,r)-(c+1,r') for |r-r'| = 1. Coincides with twisted_square
    /// (up to vertex naming) at m = 2.
    static LatticeModel mleg(int m, int n);

    static LatticeModel custom(std::string name,
                               std::vector<std::pair<int, int>> vertices,
                               std::vector<std::pair<int, int>> edges);
    /// Disjoint union; the second operand's columns are shifted past the
    /// first's so transfer enumeration still applies.
    static LatticeModel disjoint_union(const LatticeModel& a, const LatticeModel& b);
};

/// One weight per vertex.
struct WeightSystem {
    std::vector<long long> w;
};

/// Centered column weights: position i (1-based among the model's columns)
/// gets i - 1 - floor(#columns/2), every row alike.
WeightSystem weight_system_f(const LatticeModel& m);
WeightSystem weight_system_zero(const LatticeModel& m);
/// One weight per column position (1-based order), every row alike.
WeightSystem weight_system_columns(const LatticeModel& m,
                                   const std::vector<long long>& per_column);

/// Independent-set census: count of arrangements per (total weight, size).
struct WeightTable {
    std::map<std::pair<long long, int>, mpz_class> cells;  // (weight, particles)
    int max_particles = 0;

    std::vector<mpz_class> particle_counts() const;  // by size; index 0 = 1
    LaurentQT graded_euler() const;                  // sum (-1)^size q^weight
    mpz_class euler() const;
    /// Weight polynomial of the fixed-size slice (the g-columns).
    LaurentQT g_poly(int particles) const;
};

/// Direct bitmask recursion over all independent sets; |V| <= 24 enforced.
WeightTable enumerate_exhaustive(const LatticeModel& m, const WeightSystem& ws);
/// Column-by-column transfer; handles any size, same result.
WeightTable enumerate_transfer(const LatticeModel& m, const WeightSystem& ws);
/// Dispatch: exhaustive when small, transfer otherwise.
WeightTable weight_table(const LatticeModel& m, const WeightSystem& ws);

std::vector<mpz_class> independence_counts(const LatticeModel& m);
mpz_class euler_char(const LatticeModel& m);
LaurentQT graded_euler(const LatticeModel& m, const WeightSystem& ws);

}  // namespace qladder
