#include "qladder/semiinf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qladder {

DiracSet::DiracSet(std::vector<int> e, std::vector<int> p)
    : omega_e(std::move(e)), omega_p(std::move(p)) {
    std::sort(omega_e.begin(), omega_e.end());
    std::sort(omega_p.begin(), omega_p.end());
    for (int v : omega_e)
        if (v < 0) throw std::invalid_argument("DiracSet: omega_e must be >= 0");
    for (int v : omega_p)
        if (v >= 0) throw std::invalid_argument("DiracSet: omega_p must be < 0");
    if (std::adjacent_find(omega_e.begin(), omega_e.end()) != omega_e.end() ||
        std::adjacent_find(omega_p.begin(), omega_p.end()) != omega_p.end())
        throw std::invalid_argument("DiracSet: duplicate entries");
}

long long DiracSet::charge() const {
    return static_cast<long long>(omega_e.size()) - static_cast<long long>(omega_p.size());
}

long long DiracSet::energy() const {
    long long u = 0;
    for (int v : omega_e) u += v;
    for (int v : omega_p) u -= v;
    return u;
}

bool DiracSet::occupied(int i) const {
    if (i >= 0) return std::binary_search(omega_e.begin(), omega_e.end(), i);
    return !std::binary_search(omega_p.begin(), omega_p.end(), i);
}

DiracSet DiracSet::shifted(int N) const {
    std::vector<int> e, p;
    // Occupied sites move to omega_e + N and the tail now ends at N-1; holes
    // move to omega_p + N. Whatever lands on the wrong side of 0 switches
    // list: an unoccupied site >= 0 is a missing entry of omega_e and an
    // occupied site < 0 is a missing hole.
    for (int v : omega_e)
        if (v + N >= 0) e.push_back(v + N);
    for (int v : omega_p)
        if (v + N < 0) p.push_back(v + N);
    if (N >= 0) {
        // sites 0..N-1 came from the tail unless they are shifted holes
        for (int s = 0; s < N; ++s)
            if (!std::binary_search(omega_p.begin(), omega_p.end(), s - N)) e.push_back(s);
    } else {
        // sites N..-1 are holes unless they were occupied before the shift
        for (int s = N; s < 0; ++s)
            if (!std::binary_search(omega_e.begin(), omega_e.end(), s - N)) p.push_back(s);
    }
    return DiracSet(std::move(e), std::move(p));
}

std::string DiracSet::str() const {
    std::ostringstream os;
    os << "e{";
    for (size_t i = 0; i < omega_e.size(); ++i) os << (i ? "," : "") << omega_e[i];
    os << "} p{";
    for (size_t i = 0; i < omega_p.size(); ++i) os << (i ? "," : "") << omega_p[i];
    os << "}";
    return os.str();
}

TransitionGraph transition_graph(LadderKind k) {
    TransitionGraph g;
    if (k == LadderKind::square_twisted) {
        // Rows x, y; the cross edges x_i - y_j with |i-j| <= 1 forbid a row
        // change between adjacent occupied columns, so a run stays in its row.
        g.rows = 2;
        g.next = {{0}, {1}};
    } else {
        // Three rows with same-column triangles, same-row edges, and the
        // cyclic diagonals x->y, y->z, z->x towards the next column. The only
        // allowed successor of x is z, of z is y, of y is x.
        g.rows = 3;
        g.next = {{2}, {0}, {1}};
    }
    return g;
}

mpz_class run_choice_count(LadderKind k, int len, bool attached_to_tail) {
    if (len < 0) throw std::invalid_argument("run_choice_count: negative length");
    TransitionGraph g = transition_graph(k);
    if (attached_to_tail) {
        // The tail fixes the entry row; each step must then be deterministic
        // for the count to be independent of which row the tail occupies.
        for (const auto& nx : g.next)
            if (nx.size() != 1)
                throw std::logic_error("run_choice_count: tail continuation not forced");
        return 1;
    }
    if (len == 0) return 1;
    std::vector<mpz_class> cur(g.rows, 1);
    for (int step = 1; step < len; ++step) {
        std::vector<mpz_class> nxt(g.rows, 0);
        for (int r = 0; r < g.rows; ++r)
            for (int s : g.next[r]) nxt[s] += cur[r];
        cur.swap(nxt);
    }
    mpz_class total = 0;
    for (const auto& v : cur) total += v;
    return total;
}

mpz_class config_multiplicity(LadderKind k, const DiracSet& d) {
    int lo = d.omega_p.empty() ? 0 : d.omega_p.front();
    int hi = d.omega_e.empty() ? -1 : d.omega_e.back();
    // Everything below lo-1 is tail; scan the finite stretch [lo-1, hi].
    int i = lo - 1;
    while (i <= hi && d.occupied(i + 1)) ++i;  // i ends at the tip of the tail run
    mpz_class mult = run_choice_count(k, 0, true);
    int run_len = 0;
    for (int s = i + 1; s <= hi + 1; ++s) {
        if (s <= hi && d.occupied(s)) {
            ++run_len;
        } else if (run_len > 0) {
            mult *= run_choice_count(k, run_len, false);
            run_len = 0;
        }
    }
    return mult;
}

namespace {

// All ascending duplicate-free sets of values >= min_val with sum <= budget
// and values <= cap (cap < 0: unbounded). Every prefix is emitted.
void gen_distinct(int min_val, int budget, int cap, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
    out.push_back(cur);
    for (int v = min_val; v <= budget && (cap < 0 || v <= cap); ++v) {
        cur.push_back(v);
        gen_distinct(v + 1, budget - v, cap, cur, out);
        cur.pop_back();
    }
}

LaurentQT statsum_impl(LadderKind k, const Window& w, int hole_cap) {
    int U_max = w.q_max;
    // omega_e: optional 0, plus a distinct set of positives with sum <= U_max.
    std::vector<std::vector<int>> positives;
    {
        std::vector<int> cur;
        gen_distinct(1, U_max, -1, cur, positives);
    }
    std::vector<std::vector<int>> e_sets;
    for (const auto& pos : positives) {
        e_sets.push_back(pos);
        std::vector<int> with0;
        with0.push_back(0);
        with0.insert(with0.end(), pos.begin(), pos.end());
        e_sets.push_back(std::move(with0));
    }
    // omega_p: distinct negatives; |value| sum <= U_max and |value| <= hole_cap.
    std::vector<std::vector<int>> p_sets;
    {
        std::vector<int> cur;
        std::vector<std::vector<int>> mags;
        gen_distinct(1, U_max, hole_cap, cur, mags);
        for (const auto& m : mags) {
            std::vector<int> neg;
            for (auto it = m.rbegin(); it != m.rend(); ++it) neg.push_back(-*it);
            p_sets.push_back(std::move(neg));
        }
    }
    LaurentQT r(w);
    for (const auto& es : e_sets) {
        long long ue = 0;
        for (int v : es) ue += v;
        if (ue > U_max) continue;
        for (const auto& ps : p_sets) {
            long long u = ue;
            for (int v : ps) u -= v;
            if (u > U_max) continue;
            long long c = static_cast<long long>(es.size()) -
                          static_cast<long long>(ps.size());
            if (c < w.t_min || c > w.t_max) continue;
            DiracSet d(es, ps);
            r.add_term(static_cast<int>(u), static_cast<int>(c),
                       config_multiplicity(k, d));
        }
    }
    return r;
}

}  // namespace

LaurentQT brute_statsum(LadderKind k, const Window& w) {
    return statsum_impl(k, w, -1);
}

LaurentQT brute_statsum_floor(LadderKind k, int floor_N, const Window& w) {
    if (floor_N < 1) throw std::invalid_argument("brute_statsum_floor: floor_N >= 1");
    return statsum_impl(k, w, floor_N - 1);
}

}  // namespace qladder
