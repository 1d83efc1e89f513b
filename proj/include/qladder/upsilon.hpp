#pragma once

#include "qladder/laurent.hpp"

namespace qladder {

/// Character of the two-row spine module Upsilon(N): basis are the
/// admissible monomials whose x-indices stay <= N-2 and y-indices <= N-1
/// (everything compatible with a spine of y's occupying columns >= N).
/// Grading: q-exponent u(gamma_N) - sum(indices) with u(gamma_N) = N(N+1)/2
/// for N >= 0 and N(N-1)/2 for N < 0; t-exponent (#generators) - N.
LaurentQT upsilon_character(int N, const Window& w);

/// Same module with the grades normalized so the embeddings
/// Upsilon(N-1) -> Upsilon(N), gamma -> y_{N-1} gamma, preserve them
/// (q-exponent N(N-1)/2 - sum(indices) for every N, t-exponent
/// #generators - N + 1). In these coordinates the character equals the
/// floor-N statistical sum on the nose.
LaurentQT upsilon_character_aligned(int N, const Window& w);

}  // namespace qladder
