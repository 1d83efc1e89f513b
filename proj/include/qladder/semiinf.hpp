#pragma once

#include <gmpxx.h>

#include <vector>

#include "qladder/laurent.hpp"

namespace qladder {

/// Row structure of a semi-infinite ladder, read column by column.
enum class LadderKind { square_twisted, tri3_cyclic };

/// Finite-defect occupation of the integers: all sufficiently negative sites
/// occupied. omega_e lists the occupied non-negatives, omega_p the empty
/// negatives (holes). Both ascending, duplicate-free.
struct DiracSet {
    std::vector<int> omega_e;
    std::vector<int> omega_p;

    DiracSet() = default;
    DiracSet(std::vector<int> e, std::vector<int> p);  // sorts and validates

    long long charge() const;  // |omega_e| - |omega_p|
    long long energy() const;  // sum of |alpha| over both defect lists
    bool occupied(int i) const;

    /// Translate every occupied site by N (the occupation of site i in the
    /// result equals the occupation of i - N).
    DiracSet shifted(int N) const;

    bool operator==(const DiracSet&) const = default;
    std::string str() const;
};

/// Which row may follow which in the next column of a contiguous run.
struct TransitionGraph {
    int rows = 0;
    std::vector<std::vector<int>> next;  // next[r] = allowed successors of row r
};

TransitionGraph transition_graph(LadderKind k);

/// Number of row labelings of a run of len consecutive occupied columns.
/// attached_to_tail means the run continues the infinite tail, whose row is
/// already forced; requires the transition graph to be deterministic.
mpz_class run_choice_count(LadderKind k, int len, bool attached_to_tail);

/// Row-labeling multiplicity of one configuration (product over its runs).
mpz_class config_multiplicity(LadderKind k, const DiracSet& d);

/// Statistical sum by direct enumeration: coefficient of q^U t^C counts
/// labeled configurations with energy U <= w.q_max and charge C within the
/// t range. Exact on the window.
LaurentQT brute_statsum(LadderKind k, const Window& w);

/// Same, over configurations whose holes stay above -floor_N, i.e. omega_p
/// inside {-(floor_N - 1), ..., -1}. floor_N = 1 forbids holes entirely.
LaurentQT brute_statsum_floor(LadderKind k, int floor_N, const Window& w);

}  // namespace qladder
