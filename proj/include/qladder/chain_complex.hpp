#pragma once

#include "qladder/check.hpp"
#include "qladder/lattice.hpp"
#include "qladder/quotient.hpp"

namespace qladder {

/// Cochain complex over Q with finite ordered bases. D[d][j] is the image of
/// the j-th degree-d basis vector, as sparse coordinates (index -> value) in
/// the degree-(d+1) basis. D has one entry per degree; the last one maps into
/// the zero space, so its columns are empty.
struct ChainComplex {
    std::vector<long long> dims;
    std::vector<std::vector<std::map<int, mpq_class>>> D;

    long long dim(int d) const {
        return (d >= 0 && d < static_cast<int>(dims.size())) ? dims[d] : 0;
    }
};

/// The complex carried by a deformed quotient: left multiplication by the
/// sum of the index-0 generators, with every image rewritten to normal form.
/// Squares to zero because the multiplier squares to zero already in the
/// free algebra.
struct DeformedComplex {
    AlgebraKind kind;
    IndexWindow window;
    GradedQuotient q;
    Element d_element;
    ChainComplex c;

    /// Coordinates of the normal form of v in the basis of its degree.
    /// Throws if a term is outside the basis (i.e. not admissible).
    std::map<int, mpq_class> coords(const Element& v, int degree) const;
};

DeformedComplex build_deformed_complex(AlgebraKind k, const IndexWindow& w,
                                       int threads = 1);

/// Complex on the independent vertex sets of a lattice: the differential
/// inserts every compatible vertex with the alternating sign given by the
/// number of occupied vertices preceding it.
ChainComplex build_fermion_complex(const LatticeModel& m);

struct CohomologyReport {
    std::vector<long long> dims;
    std::vector<int> ranks;     // rank of D[d]
    std::vector<long long> h;   // cohomology dimension per degree
    mpz_class euler;            // alternating sum of dims (== that of h)
    CheckReport checks;         // d^2 == 0, nonnegative h

    long long total_h() const;
    std::string h_str() const;  // "(0,1,0)"
};

CohomologyReport cohomology(const ChainComplex& c);

/// Distinguished cocycles of the two-row complexes on an odd number of
/// columns 2k+1: degree k+1, built outward from the middle column two
/// columns at a time, ending on the y row (resp. the x row).
Element cocycle_y(int n);
Element cocycle_x(int n);

/// Certify that v represents a nonzero cohomology class: its normal form is
/// nonzero, D v == 0 holds exactly, and appending v's coordinate row to the
/// previous differential's image raises the certified rank by one (a rank
/// computed modulo a prime only ever undercounts, so the bump is a proof).
CheckReport class_check(const DeformedComplex& dc, const Element& v);

}  // namespace qladder
