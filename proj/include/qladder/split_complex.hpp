#pragma once

#include <array>

#include "qladder/chain_complex.hpp"

namespace qladder {

/// Decomposition of the two-row complex on 2k+1 columns by which
/// extreme-index generators divide a basis monomial: the left label records
/// x[-k] / y[-k] / neither, the right label x[k] / y[k] / neither (a
/// monomial never holds both generators of one extreme column, they clash).
/// The differential can only introduce extreme factors, never remove them,
/// so it is block-triangular for the divisibility order and the nine
/// diagonal blocks are complexes in their own right.
struct SplitPieces {
    int k = 0;
    DeformedComplex parent;
    // labels: 0 = neither, 1 = x, 2 = y; piece[left][right]
    std::array<std::array<ChainComplex, 3>, 3> piece;
    CheckReport structure;  // triangularity and diagonal d^2 == 0
};

SplitPieces split_complex(int k, int threads = 1);

/// Full pattern for one k: the corner pieces carry a single cohomology
/// class in degree k+1 exactly when the parity matches ((x,x)/(y,y) for
/// even k with the distinguished cocycles as representatives, (x,y)/(y,x)
/// for odd k), the half-divisible pieces are acyclic, and the piece with
/// neither extreme reproduces the complex on 2k-1 columns matrix for
/// matrix.
CheckReport split_complex_check(int k, int threads = 1);

}  // namespace qladder
