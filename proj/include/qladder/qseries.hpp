#pragma once

#include "qladder/check.hpp"
#include "qladder/laurent.hpp"

namespace qladder {

/// Which semi-infinite ladder a statistical sum refers to. The square ladder
/// admits 2 row labelings per isolated run, the three-row cyclic ladder 3.
enum class StatModel { square, tri3 };

int run_factor(StatModel m);

enum class PochSign { plus, minus };

/// (q)_n^+ = prod_{m=1..n} (1 + q^m) or (q)_n = prod_{m=1..n} (1 - q^m),
/// truncated at q_order.
LaurentQT pochhammer(int n, PochSign s, int q_order);

/// prod_{m=1..n} 1/(1 - q^m) to q_order; n < 0 means the infinite product
/// (the partition generating function).
LaurentQT inv_pochhammer(int n, int q_order);

/// Charge kernel: sum_n q^{n(n-1)/2} t^n over the window (n of both signs).
LaurentQT theta_kernel(const Window& w);

/// prod_{m>=1} (1 + (r-1) q^m)/(1 - q^m): the per-level factor of the closed
/// statistical sums, r = run_factor of the model.
LaurentQT overpartition_product(int q_order, int run_fac);

/// Full statistical sum in closed form: overpartition_product * theta_kernel.
LaurentQT F_closed(const Window& w, StatModel m);

/// (q)_m^+ / (q)_m to q_order.
LaurentQT poch_ratio(int m, int q_order);

/// phi_n = ((q)_n^+ / (q)_n) q^{n(n-1)/2}: the t^n column of F_plus.
LaurentQT phi_n(int n, int q_order);

/// No-holes statistical sum: sum_{n>=0} phi_n t^n. Requires w.t_min >= 0.
LaurentQT F_plus(const Window& w);

/// Floor-N statistical sum (holes no deeper than -N+1):
/// sum_{n >= -N+1} ((q)^+_{n+N-1} / (q)_{n+N-1}) q^{n(n-1)/2} t^n, N >= 1.
LaurentQT F_N_closed(int N, const Window& w);

/// F_plus(t) = F_plus(qt) + t (F_plus(qt) + q F_plus(q^2 t)), plus the
/// equivalent coefficient recurrence (1-q^n) phi_n = q^{n-1} (1+q^n) phi_{n-1}.
CheckReport functional_equation_check(int q_order, int t_max);

/// prod_{j>=0} (1+q^j t) prod_{k>=1} (1+q^k t^-1)
///   == [prod 1/(1-q^l)] * theta_kernel, compared for |t_exp| <= t_abs.
CheckReport jacobi_triple_check(int q_order, int t_abs);

/// prod (1+q^m)/(1-q^m) == [prod 1/(1-q^m)]^2 * prod (1-q^{2k}).
CheckReport remark_identity_check(int q_order);

}  // namespace qladder
