#include "qladder/qseries.hpp"

#include <cmath>
#include <stdexcept>

namespace qladder {

int run_factor(StatModel m) { return m == StatModel::square ? 2 : 3; }

LaurentQT pochhammer(int n, PochSign s, int q_order) {
    if (n < 0) throw std::invalid_argument("pochhammer: n < 0");
    Window w = Window::q_only(q_order);
    LaurentQT r = LaurentQT::one(w);
    int sign = (s == PochSign::plus) ? 1 : -1;
    // Factors with m > q_order are 1 within the window.
    for (int m = 1; m <= n && m <= q_order; ++m) {
        LaurentQT f = LaurentQT::one(w);
        f.add_term(m, 0, sign);
        r = r.mul(f, w);  // both factors have q-valuation 0: truncation exact
    }
    return r;
}

LaurentQT inv_pochhammer(int n, int q_order) {
    Window w = Window::q_only(q_order);
    LaurentQT r = LaurentQT::one(w);
    int top = (n < 0) ? q_order : std::min(n, q_order);
    for (int m = 1; m <= top; ++m) {
        // 1/(1-q^m) = sum_j q^{mj}, exact to q_order.
        LaurentQT g(w);
        for (int j = 0; m * j <= q_order; ++j) g.add_term(m * j, 0, 1);
        r = r.mul(g, w);
    }
    return r;
}

LaurentQT theta_kernel(const Window& w) {
    LaurentQT r(w);
    for (int n = w.t_min; n <= w.t_max; ++n) {
        long long e = static_cast<long long>(n) * (n - 1) / 2;
        if (e <= w.q_max) r.add_term(static_cast<int>(e), n, 1);
    }
    return r;
}

LaurentQT overpartition_product(int q_order, int run_fac) {
    Window w = Window::q_only(q_order);
    LaurentQT r = LaurentQT::one(w);
    for (int m = 1; m <= q_order; ++m) {
        LaurentQT f(w);
        for (int j = 0; m * j <= q_order; ++j) f.add_term(m * j, 0, 1);
        LaurentQT num = LaurentQT::one(w);
        num.add_term(m, 0, run_fac - 1);
        r = r.mul(num.mul(f, w), w);
    }
    return r;
}

LaurentQT F_closed(const Window& w, StatModel m) {
    LaurentQT op = overpartition_product(w.q_max, run_factor(m));
    // op is exact to q_max with t-support {0}; theta is exact in w, so every
    // in-window product coefficient only needs op up to q_max. Exact.
    return theta_kernel(w).mul(op, w);
}

LaurentQT poch_ratio(int m, int q_order) {
    Window w = Window::q_only(q_order);
    return pochhammer(m, PochSign::plus, q_order).mul(inv_pochhammer(m, q_order), w);
}

LaurentQT phi_n(int n, int q_order) {
    if (n < 0) throw std::invalid_argument("phi_n: n < 0");
    Window w = Window::q_only(q_order);
    long long e = static_cast<long long>(n) * (n - 1) / 2;
    if (e > q_order) return LaurentQT::zero(w);
    // source exact to q_order, so shifting up and re-truncating stays exact
    return poch_ratio(n, q_order).shifted(static_cast<int>(e), 0, w);
}

LaurentQT F_plus(const Window& w) {
    if (w.t_min < 0) throw std::invalid_argument("F_plus: window must have t_min >= 0");
    LaurentQT r(w);
    for (int n = w.t_min; n <= w.t_max; ++n)
        for (const auto& [qe, c] : phi_n(n, w.q_max).column(0)) r.add_term(qe, n, c);
    return r;
}

LaurentQT F_N_closed(int N, const Window& w) {
    if (N < 1) throw std::invalid_argument("F_N_closed: N >= 1 required");
    LaurentQT r(w);
    for (int n = std::max(-N + 1, w.t_min); n <= w.t_max; ++n) {
        long long e = static_cast<long long>(n) * (n - 1) / 2;
        if (e > w.q_max) continue;
        LaurentQT col = poch_ratio(n + N - 1, w.q_max)
                            .shifted(static_cast<int>(e), 0, Window::q_only(w.q_max));
        for (const auto& [qe, c] : col.column(0)) r.add_term(qe, n, c);
    }
    return r;
}

CheckReport functional_equation_check(int q_order, int t_max) {
    CheckReport rep;
    rep.name = "functional_equation";
    Window w(q_order, 0, t_max);
    LaurentQT F = F_plus(w);
    // t -> q^a t raises q degrees (t-support is nonnegative), so truncating
    // back to w is exact; the t-shift below reads column n-1, and column -1
    // of F_plus is genuinely zero.
    LaurentQT A = F.subst_t_qa(1, w);
    LaurentQT B = F.subst_t_qa(2, w);
    LaurentQT rhs = A + (A + B.shifted(1, 0, w)).shifted(0, 1, w);
    rep.compare("F_plus(t) vs F_plus(qt) + t(F_plus(qt) + q F_plus(q^2 t))",
                F.str(), rhs.str(), LaurentQT::agree_on(F, rhs, w));

    Window wq = Window::q_only(q_order);
    for (int n = 1; n <= t_max; ++n) {
        LaurentQT lhs_f = LaurentQT::one(wq);
        lhs_f.add_term(n, 0, -1);
        LaurentQT lhs = phi_n(n, q_order).mul(lhs_f, wq);
        LaurentQT rhs_f(wq);
        rhs_f.add_term(n - 1, 0, 1);
        rhs_f.add_term(2 * n - 1, 0, 1);
        LaurentQT rhsn = phi_n(n - 1, q_order).mul(rhs_f, wq);
        rep.compare("(1-q^" + std::to_string(n) + ") phi_" + std::to_string(n) +
                        " vs q^" + std::to_string(n - 1) + "(1+q^" + std::to_string(n) +
                        ") phi_" + std::to_string(n - 1),
                    lhs.str(), rhsn.str(), LaurentQT::agree_on(lhs, rhsn, wq));
    }
    return rep;
}

CheckReport jacobi_triple_check(int q_order, int t_abs) {
    CheckReport rep;
    rep.name = "jacobi_triple_product";
    // A term of t-degree a needs q-weight >= a(a-1)/2 from the (1+q^j t)
    // factors (ascending j), and one of t-degree -b needs >= b(b+1)/2 from
    // the (1+q^k t^-1) factors. Beyond those bounds the q-truncation already
    // discards the term, so clamping t to [-b_big, a_big] during the product
    // drops nothing that q <= q_order keeps.
    int a_big = 1;
    while (static_cast<long long>(a_big + 1) * a_big / 2 <= q_order) ++a_big;
    int b_big = 1;
    while (static_cast<long long>(b_big + 1) * (b_big + 2) / 2 <= q_order) ++b_big;
    if (t_abs > std::min(a_big, b_big))
        throw std::invalid_argument("jacobi_triple_check: t_abs too wide for q_order");
    Window wide(q_order, -b_big, a_big);
    LaurentQT lhs = LaurentQT::one(wide);
    for (int j = 0; j <= q_order; ++j) {
        LaurentQT f = LaurentQT::one(wide);
        f.add_term(j, 1, 1);
        lhs = lhs.mul(f, wide);
    }
    for (int k = 1; k <= q_order; ++k) {
        LaurentQT f = LaurentQT::one(wide);
        f.add_term(k, -1, 1);
        lhs = lhs.mul(f, wide);
    }
    Window cmp(q_order, -t_abs, t_abs);
    LaurentQT rhs = theta_kernel(cmp).mul(inv_pochhammer(-1, q_order), cmp);
    rep.compare("prod (1+q^j t) prod (1+q^k/t) vs (partition gf) * theta on " + cmp.str(),
                lhs.truncated(cmp).str(), rhs.str(),
                LaurentQT::agree_on(lhs, rhs, cmp));
    return rep;
}

CheckReport remark_identity_check(int q_order) {
    CheckReport rep;
    rep.name = "remark_identity";
    Window w = Window::q_only(q_order);
    LaurentQT lhs = overpartition_product(q_order, 2);
    LaurentQT pg = inv_pochhammer(-1, q_order);
    LaurentQT evens = LaurentQT::one(w);
    for (int k = 1; 2 * k <= q_order; ++k) {
        LaurentQT f = LaurentQT::one(w);
        f.add_term(2 * k, 0, -1);
        evens = evens.mul(f, w);
    }
    LaurentQT rhs = pg.mul(pg, w).mul(evens, w);
    rep.compare("prod (1+q^m)/(1-q^m) vs (partition gf)^2 * prod (1-q^{2k})",
                lhs.str(), rhs.str(), LaurentQT::agree_on(lhs, rhs, w));
    return rep;
}

}  // namespace qladder
