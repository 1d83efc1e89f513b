#include "qladder/upsilon.hpp"

namespace qladder {

namespace {

// Descending-column placement. Every call site is itself a complete basis
// monomial, so each state emits. last_col/last_y describe the previous
// generator (or the spine: column N, y). A generator one column below the
// previous must share its row; with a gap both rows are open. x at column
// N-1 is excluded automatically by the spine being a y.
void place(long long base, int last_col, bool last_y, int cnt, long long sumidx,
           const Window& w, int max_cnt, LaurentQT& out, int N) {
    long long u = base - sumidx;
    int t = cnt - N + 1;
    if (u <= w.q_max && t >= w.t_min && t <= w.t_max)
        out.add_term(static_cast<int>(u), t, 1);
    if (cnt >= max_cnt || t >= w.t_max) return;  // more generators only raise t
    for (int c = last_col - 1;; --c) {
        if (c <= 0 && u + (-static_cast<long long>(c)) > w.q_max)
            break;  // deeper columns only cost more energy
        bool adjacent = (c == last_col - 1);
        for (int ry = 0; ry < 2; ++ry) {
            bool y = (ry == 1);
            if (adjacent && y != last_y) continue;
            if (!y && c > N - 2) continue;  // x clashes with the spine
            place(base, c, y, cnt + 1, sumidx + c, w, max_cnt, out, N);
        }
    }
}

}  // namespace

LaurentQT upsilon_character_aligned(int N, const Window& w) {
    LaurentQT out(w);
    long long base = static_cast<long long>(N) * (N - 1) / 2;
    int max_cnt = w.t_max + N - 1;
    if (max_cnt < 0) return out;
    place(base, N, true, 0, 0, w, max_cnt, out, N);
    return out;
}

LaurentQT upsilon_character(int N, const Window& w) {
    int dq = N > 0 ? N : 0;
    // aligned exponents shifted by (q^{dq}, t^{-1}); widen the window first
    Window aligned_w(w.q_max - dq, w.t_min + 1, w.t_max + 1);
    return upsilon_character_aligned(N, aligned_w).shifted(dq, -1, w);
}

}  // namespace qladder
