#pragma once

#include "qladder/element.hpp"

namespace qladder {

/// Contiguous index range the generators live on.
struct IndexWindow {
    int lo = 0;
    int hi = -1;

    IndexWindow() = default;
    IndexWindow(int l, int h);
    /// n generator columns centered at 0: lo = -(n/2), hi = lo + n - 1.
    static IndexWindow centered(int n);

    int size() const { return hi - lo + 1; }
    bool contains(int i) const { return i >= lo && i <= hi; }
};

/// The four finite algebras: fermionic (one monomial relation per lattice
/// edge) or deformed (full quadratic relations), on two or three rows.
enum class AlgebraKind {
    fermion_square,
    deformed_square,
    fermion_tri3,
    deformed_tri3
};

int rows_of(AlgebraKind k);
bool is_deformed(AlgebraKind k);

/// Generating relations of the defining ideal, all homogeneous of degree 2.
/// deformed_square: sum_i x_i y_{s-i} for every attainable s, and
/// sum_i (-1)^i x_i y_{s-i} for odd s (even-s alternating sums vanish
/// identically). deformed_tri3: the same plain sums for the pairs
/// (x,y), (y,z), (z,x) plus same-row alternating sums for odd s.
/// fermion kinds: x_i y_j for |i-j| <= 1, resp. the nine tri3 edge families.
std::vector<Element> relation_set(AlgebraKind k, const IndexWindow& w);

/// Is the product of two single generators annihilated by the fermionic
/// relations (i.e. are the two lattice sites adjacent)?
bool generators_clash(AlgebraKind k, Generator a, Generator b);

/// Monomials untouched by leading terms: no two generators clash.
bool admissible(AlgebraKind k, const Monomial& m);
std::vector<Monomial> admissible_monomials(AlgebraKind k, const IndexWindow& w,
                                           int degree);

/// All monomials over the window of the given degree (row masks expanded in
/// monomial order).
std::vector<Monomial> all_monomials(AlgebraKind k, const IndexWindow& w, int degree);

}  // namespace qladder
