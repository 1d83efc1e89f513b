#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace qladder {

/// Truncation window for series in (q, t). A series keeps every term with
/// q_exp <= q_max and t_min <= t_exp <= t_max. q exponents are unbounded
/// below: the Laurent parts that occur here (graded Euler characteristics,
/// boundary-weight columns) are finite by construction and kept exactly.
struct Window {
    int q_max = 0;
    int t_min = 0;
    int t_max = 0;

    Window() = default;
    Window(int qm, int tlo, int thi);

    static Window q_only(int qm) { return Window(qm, 0, 0); }

    /// Effectively untruncated; for finite exact polynomials.
    static Window exact();

    bool contains(int q_exp, int t_exp) const {
        return q_exp <= q_max && t_exp >= t_min && t_exp <= t_max;
    }
    Window intersect(const Window& o) const;
    bool operator==(const Window&) const = default;
    std::string str() const;
};

/// Sparse bivariate Laurent series with integer coefficients, truncated to a
/// Window. Terms are keyed (t_exp, q_exp) so iteration follows the canonical
/// (t, q) order used by the serializers.
class LaurentQT {
public:
    using Key = std::pair<int, int>;  // (t_exp, q_exp)

    explicit LaurentQT(const Window& w) : win_(w) {}

    static LaurentQT zero(const Window& w) { return LaurentQT(w); }
    static LaurentQT one(const Window& w);
    static LaurentQT term(const Window& w, const mpz_class& c, int q_exp, int t_exp);

    const Window& window() const { return win_; }
    const std::map<Key, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    mpz_class coeff(int q_exp, int t_exp) const;
    /// Adds c * q^q_exp t^t_exp; silently drops terms outside the window.
    void add_term(int q_exp, int t_exp, const mpz_class& c);
    /// One t-column as q_exp -> coefficient.
    std::map<int, mpz_class> column(int t_exp) const;

    LaurentQT& operator+=(const LaurentQT& o);  // window shrinks to the intersection
    LaurentQT& operator-=(const LaurentQT& o);
    LaurentQT operator-() const;
    LaurentQT& operator*=(const mpz_class& c);

    /// Product of the stored terms, truncated to `target`. The caller picks
    /// `target` inside the region where truncation of the operands cannot
    /// have discarded contributing terms; each call site states why its
    /// window is valid.
    LaurentQT mul(const LaurentQT& o, const Window& target) const;

    /// Multiply by the monomial q^dq t^dt.
    LaurentQT shifted(int dq, int dt, const Window& target) const;
    /// Substitute t -> q^a t.
    LaurentQT subst_t_qa(int a, const Window& target) const;
    LaurentQT truncated(const Window& target) const;

    /// Coefficientwise comparison over every lattice point of `w`.
    static bool agree_on(const LaurentQT& a, const LaurentQT& b, const Window& w);

    bool operator==(const LaurentQT& o) const {
        return win_ == o.win_ && terms_ == o.terms_;
    }

    /// Evaluate at q = 1, per t-column. Only meaningful when the stored
    /// terms are the whole series (exact windows).
    std::map<int, mpz_class> eval_q1() const;

    std::string str() const;

private:
    Window win_;
    std::map<Key, mpz_class> terms_;
};

LaurentQT operator+(LaurentQT a, const LaurentQT& b);
LaurentQT operator-(LaurentQT a, const LaurentQT& b);
LaurentQT operator*(LaurentQT a, const mpz_class& c);

}  // namespace qladder
