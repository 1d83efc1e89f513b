#pragma once

#include "qladder/check.hpp"
#include "qladder/laurent.hpp"
#include "qladder/linalg.hpp"
#include "qladder/relations.hpp"

namespace qladder {

/// Quotient of the free anticommutative algebra on the window's generators
/// by the relation ideal, decomposed into blocks graded by (multidegree,
/// index sum). The relations are homogeneous central elements of even word
/// degree, so the one-sided multiples monomial * relation span the ideal
/// degree by degree.
class GradedQuotient {
public:
    struct Block {
        std::vector<Monomial> cols;  // non-admissible first, then admissible
        int n_nonadmissible = 0;
        RrefQ rref;
    };
    using BlockKey = std::pair<std::array<int, 3>, long long>;

    AlgebraKind kind;
    IndexWindow window;
    std::vector<std::vector<Monomial>> basis;  // per degree; non-pivot monomials
    std::map<BlockKey, Block> blocks;

    std::vector<long long> dims() const;

    /// Canonical representative: the unique ideal-equivalent combination of
    /// basis (non-pivot) monomials. Linear and idempotent.
    Element normal_form(const Element& e) const;

    /// True when every pivot landed on a non-admissible column (so the
    /// admissible monomials are exactly the surviving basis).
    bool pivots_avoid_admissible() const;
};

GradedQuotient graded_quotient(AlgebraKind k, const IndexWindow& w, int threads = 1);

/// Three-way dimension check for a deformed-square window of n columns:
/// quotient dims == admissible-monomial counts == independent-set counts of
/// the companion lattice; plus pivot placement and seeded reduction laws
/// (idempotency, ideal-invariance, identity on basis monomials).
CheckReport quotient_dimension_check(int n, unsigned seed, int threads = 1,
                                     int samples = 1000);

/// Same machinery for the three-row deformed algebra; dims are computed and
/// reported (not asserted against the admissible counts).
CheckReport quotient_tri3_report(int n, int threads = 1);

}  // namespace qladder
