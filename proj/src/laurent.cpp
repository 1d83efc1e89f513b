#include "qladder/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qladder {

namespace {
constexpr int kExactBound = 1 << 28;
}

Window::Window(int qm, int tlo, int thi) : q_max(qm), t_min(tlo), t_max(thi) {
    if (tlo > thi) throw std::invalid_argument("Window: t_min > t_max");
}

Window Window::exact() { return Window(kExactBound, -kExactBound, kExactBound); }

Window Window::intersect(const Window& o) const {
    Window w;
    w.q_max = std::min(q_max, o.q_max);
    w.t_min = std::max(t_min, o.t_min);
    w.t_max = std::min(t_max, o.t_max);
    if (w.t_min > w.t_max) throw std::invalid_argument("Window::intersect: empty t range");
    return w;
}

std::string Window::str() const {
    std::ostringstream os;
    os << "{q<=" << q_max << ", t in [" << t_min << "," << t_max << "]}";
    return os.str();
}

LaurentQT LaurentQT::one(const Window& w) {
    LaurentQT r(w);
    r.add_term(0, 0, 1);
    return r;
}

LaurentQT LaurentQT::term(const Window& w, const mpz_class& c, int q_exp, int t_exp) {
    LaurentQT r(w);
    r.add_term(q_exp, t_exp, c);
    return r;
}

mpz_class LaurentQT::coeff(int q_exp, int t_exp) const {
    auto it = terms_.find({t_exp, q_exp});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentQT::add_term(int q_exp, int t_exp, const mpz_class& c) {
    if (c == 0 || !win_.contains(q_exp, t_exp)) return;
    Key k{t_exp, q_exp};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::map<int, mpz_class> LaurentQT::column(int t_exp) const {
    std::map<int, mpz_class> col;
    auto lo = terms_.lower_bound({t_exp, std::numeric_limits<int>::min()});
    auto hi = terms_.upper_bound({t_exp, std::numeric_limits<int>::max()});
    for (auto it = lo; it != hi; ++it) col[it->first.second] = it->second;
    return col;
}

LaurentQT& LaurentQT::operator+=(const LaurentQT& o) {
    Window w = win_.intersect(o.win_);
    LaurentQT r(w);
    for (const auto& [k, c] : terms_) r.add_term(k.second, k.first, c);
    for (const auto& [k, c] : o.terms_) r.add_term(k.second, k.first, c);
    *this = std::move(r);
    return *this;
}

LaurentQT& LaurentQT::operator-=(const LaurentQT& o) {
    Window w = win_.intersect(o.win_);
    LaurentQT r(w);
    for (const auto& [k, c] : terms_) r.add_term(k.second, k.first, c);
    for (const auto& [k, c] : o.terms_) r.add_term(k.second, k.first, -c);
    *this = std::move(r);
    return *this;
}

LaurentQT LaurentQT::operator-() const {
    LaurentQT r(win_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

LaurentQT& LaurentQT::operator*=(const mpz_class& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [k, v] : terms_) v *= c;
    }
    return *this;
}

LaurentQT LaurentQT::mul(const LaurentQT& o, const Window& target) const {
    LaurentQT r(target);
    for (const auto& [ka, ca] : terms_) {
        // Keys are (t, q); skip whole t-rows that cannot land in the window.
        for (const auto& [kb, cb] : o.terms_) {
            int t = ka.first + kb.first;
            if (t < target.t_min || t > target.t_max) continue;
            int q = ka.second + kb.second;
            if (q > target.q_max) continue;
            r.add_term(q, t, ca * cb);
        }
    }
    return r;
}

LaurentQT LaurentQT::shifted(int dq, int dt, const Window& target) const {
    LaurentQT r(target);
    for (const auto& [k, c] : terms_) r.add_term(k.second + dq, k.first + dt, c);
    return r;
}

LaurentQT LaurentQT::subst_t_qa(int a, const Window& target) const {
    LaurentQT r(target);
    for (const auto& [k, c] : terms_)
        r.add_term(k.second + a * k.first, k.first, c);
    return r;
}

LaurentQT LaurentQT::truncated(const Window& target) const {
    LaurentQT r(target);
    for (const auto& [k, c] : terms_) r.add_term(k.second, k.first, c);
    return r;
}

bool LaurentQT::agree_on(const LaurentQT& a, const LaurentQT& b, const Window& w) {
    auto within = [&w](const Key& k) {
        return k.first >= w.t_min && k.first <= w.t_max && k.second <= w.q_max;
    };
    for (const auto& [k, c] : a.terms_)
        if (within(k) && b.coeff(k.second, k.first) != c) return false;
    for (const auto& [k, c] : b.terms_)
        if (within(k) && a.coeff(k.second, k.first) != c) return false;
    return true;
}

std::map<int, mpz_class> LaurentQT::eval_q1() const {
    std::map<int, mpz_class> out;
    for (const auto& [k, c] : terms_) out[k.first] += c;
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

std::string LaurentQT::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        mpz_class a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit_coeff = (a == 1) && (k.first != 0 || k.second != 0);
        if (!unit_coeff) os << a.get_str();
        bool need_space = !unit_coeff;
        if (k.second != 0) {
            if (need_space) os << " ";
            os << "q";
            if (k.second != 1) os << "^" << k.second;
            need_space = true;
        }
        if (k.first != 0) {
            if (need_space) os << " ";
            os << "t";
            if (k.first != 1) os << "^" << k.first;
        }
    }
    return os.str();
}

LaurentQT operator+(LaurentQT a, const LaurentQT& b) { return a += b; }
LaurentQT operator-(LaurentQT a, const LaurentQT& b) { return a -= b; }
LaurentQT operator*(LaurentQT a, const mpz_class& c) { return a *= c; }

}  // namespace qladder
