#include "qladder/fock.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qladder/qseries.hpp"

namespace qladder {

long long FockVector::weight() const {
    long long w = 0;
    for (int a : phi) w -= a;
    for (int b : phistar) w -= b;
    for (int c : o) w -= c;
    return w;
}

long long FockVector::charge() const {
    return static_cast<long long>(phi.size()) -
           static_cast<long long>(phistar.size());
}

std::string FockVector::str() const {
    std::ostringstream os;
    for (int a : phi) os << "phi[" << a << "] ";
    for (int b : phistar) os << "phistar[" << b << "] ";
    for (int c : o) os << "o[" << c << "] ";
    os << "v0";
    return os.str();
}

FockElement FockElement::vacuum() { return from(FockVector{}, 1); }

FockElement FockElement::from(const FockVector& v, const mpq_class& c) {
    FockElement e;
    e.add(v, c);
    return e;
}

mpq_class FockElement::coeff(const FockVector& v) const {
    auto it = terms_.find(v);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void FockElement::add(const FockVector& v, const mpq_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(v, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

FockElement& FockElement::operator+=(const FockElement& o) {
    for (const auto& [v, c] : o.terms_) add(v, c);
    return *this;
}

FockElement& FockElement::operator-=(const FockElement& o) {
    for (const auto& [v, c] : o.terms_) add(v, -c);
    return *this;
}

FockElement& FockElement::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [v, cf] : terms_) cf *= c;
    return *this;
}

std::string FockElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << c.get_str() << " ";
        os << v.str();
    }
    return os.str();
}

namespace {

/// Insert value into a strictly descending list; returns the alternating
/// sign, or 0 if the value repeats.
int desc_insert(std::vector<int>& list, int value) {
    auto it = list.begin();
    while (it != list.end() && *it > value) ++it;
    if (it != list.end() && *it == value) return 0;
    int pos = static_cast<int>(it - list.begin());
    list.insert(it, value);
    return (pos % 2 == 0) ? 1 : -1;
}

FockElement apply_phi_vec(int i, const FockVector& v, const mpq_class& c) {
    FockElement out;
    if (i <= 0) {
        FockVector w = v;
        int sgn = desc_insert(w.phi, i);
        if (sgn != 0) out.add(w, c * sgn);
        return out;
    }
    // i >= 1: contract against phistar[-i]; the residual dies on v0
    auto it = std::find(v.phistar.begin(), v.phistar.end(), -i);
    if (it == v.phistar.end()) return out;
    int pos = static_cast<int>(it - v.phistar.begin());
    int sgn = ((v.phi.size() + pos) % 2 == 0) ? 1 : -1;
    FockVector w = v;
    w.phistar.erase(w.phistar.begin() + pos);
    out.add(w, c * sgn);
    return out;
}

FockElement apply_phi_star_vec(int i, const FockVector& v,
                               const mpq_class& c) {
    FockElement out;
    if (i <= -1) {
        FockVector w = v;
        int sgn = desc_insert(w.phistar, i);
        if (sgn != 0)
            out.add(w, c * sgn * ((v.phi.size() % 2 == 0) ? 1 : -1));
        return out;
    }
    // i >= 0: contract against phi[-i]
    auto it = std::find(v.phi.begin(), v.phi.end(), -i);
    if (it == v.phi.end()) return out;
    int pos = static_cast<int>(it - v.phi.begin());
    FockVector w = v;
    w.phi.erase(w.phi.begin() + pos);
    out.add(w, c * ((pos % 2 == 0) ? 1 : -1));
    return out;
}

}  // namespace

FockElement apply_phi(int i, const FockElement& v) {
    FockElement out;
    for (const auto& [vec, c] : v.terms()) out += apply_phi_vec(i, vec, c);
    return out;
}

FockElement apply_phi_star(int i, const FockElement& v) {
    FockElement out;
    for (const auto& [vec, c] : v.terms())
        out += apply_phi_star_vec(i, vec, c);
    return out;
}

FockElement apply_o(int j, const FockElement& v) {
    if (j >= 0 || j % 2 == 0)
        throw std::invalid_argument("apply_o: index must be negative odd");
    FockElement out;
    for (const auto& [vec, c] : v.terms()) {
        FockVector w = vec;
        w.o.insert(std::lower_bound(w.o.begin(), w.o.end(), j), j);
        out.add(w, c);
    }
    return out;
}

FockElement apply_psi(int i, const FockElement& v) {
    FockElement out;
    for (const auto& [vec, c] : v.terms()) {
        // creators: phi_{i-j} with i-j <= 0, so odd j in [i, -1]
        for (int j = -1; j >= i; j -= 2) {
            FockElement t = apply_phi_vec(i - j, vec, c);
            if (!t.is_zero()) out += apply_o(j, t);
        }
        // annihilators: phi_{i-j} contracts phistar_b, so j = i + b < i
        for (int b : vec.phistar) {
            int j = i + b;
            if (j >= 0 || j % 2 == 0) continue;  // not a mode of the o series
            FockElement t = apply_phi_vec(i - j, vec, c);
            if (!t.is_zero()) out += apply_o(j, t);
        }
    }
    return out;
}

std::vector<FockVector> fock_basis(int w_max) {
    // enumerate each factor within the weight budget, then combine
    std::vector<std::vector<int>> phis{{}}, stars{{}}, os{{}};
    {
        // strictly descending phi indices <= 0
        std::vector<int> cur;
        auto rec = [&](auto&& self, int next, long long left) -> void {
            for (int a = next; -a <= left; --a) {
                cur.push_back(a);
                phis.push_back(cur);
                self(self, a - 1, left + a);
                cur.pop_back();
            }
        };
        rec(rec, 0, w_max);
    }
    {
        std::vector<int> cur;
        auto rec = [&](auto&& self, int next, long long left) -> void {
            for (int b = next; -b <= left; --b) {
                cur.push_back(b);
                stars.push_back(cur);
                self(self, b - 1, left + b);
                cur.pop_back();
            }
        };
        rec(rec, -1, w_max);
    }
    {
        // o-indices negative odd with repetition: multisets enumerated by
        // weakly increasing magnitude, stored ascending
        std::vector<int> cur;
        auto rec = [&](auto&& self, int mag, long long left) -> void {
            for (int m = mag; m <= left; m += 2) {
                cur.insert(cur.begin(), -m);
                os.push_back(cur);
                self(self, m, left - m);
                cur.erase(cur.begin());
            }
        };
        rec(rec, 1, w_max);
    }

    auto wt = [](const std::vector<int>& v) {
        long long s = 0;
        for (int x : v) s -= x;
        return s;
    };
    std::vector<FockVector> out;
    for (const auto& p : phis) {
        long long wp = wt(p);
        if (wp > w_max) continue;
        for (const auto& st : stars) {
            long long ws = wp + wt(st);
            if (ws > w_max) continue;
            for (const auto& oo : os) {
                if (ws + wt(oo) > w_max) continue;
                out.push_back(FockVector{p, st, oo});
            }
        }
    }
    std::sort(out.begin(), out.end(), [&](const FockVector& a, const FockVector& b) {
        auto ka = a.weight(), kb = b.weight();
        if (ka != kb) return ka < kb;
        return a < b;
    });
    return out;
}

LaurentQT fock_character(const Window& w) {
    LaurentQT out = LaurentQT::zero(w);
    for (const FockVector& v : fock_basis(w.q_max))
        out.add_term(static_cast<int>(v.weight()),
                     static_cast<int>(v.charge()), 1);
    return out;
}

CheckReport car_check(int w_max, int idx) {
    CheckReport rep;
    rep.name = "canonical_anticommutators";
    std::vector<FockVector> basis = fock_basis(w_max);
    bool phi_phi = true, star_star = true, mixed = true, central = true;
    for (const FockVector& bv : basis) {
        FockElement v = FockElement::from(bv, 1);
        for (int i = -idx; i <= idx; ++i) {
            for (int j = -idx; j <= idx; ++j) {
                FockElement a = apply_phi(i, apply_phi(j, v));
                a += apply_phi(j, apply_phi(i, v));
                if (!a.is_zero()) phi_phi = false;

                FockElement b = apply_phi_star(i, apply_phi_star(j, v));
                b += apply_phi_star(j, apply_phi_star(i, v));
                if (!b.is_zero()) star_star = false;

                FockElement m = apply_phi(i, apply_phi_star(j, v));
                m += apply_phi_star(j, apply_phi(i, v));
                if (i + j == 0) m -= v;
                if (!m.is_zero()) mixed = false;
            }
            FockElement c = apply_o(-1, apply_phi(i, v));
            c -= apply_phi(i, apply_o(-1, v));
            FockElement d = apply_o(-3, apply_phi_star(i, v));
            d -= apply_phi_star(i, apply_o(-3, v));
            if (!c.is_zero() || !d.is_zero()) central = false;
        }
    }
    rep.note("basis vectors tested: " + std::to_string(basis.size()));
    rep.require("{phi_i, phi_j} = 0", phi_phi);
    rep.require("{phistar_i, phistar_j} = 0", star_star);
    rep.require("{phi_i, phistar_j} = delta_{i+j}", mixed);
    rep.require("o central", central);
    return rep;
}

CheckReport mode_relation_check(int s_abs, int w_max) {
    CheckReport rep;
    rep.name = "mode_relations";
    std::vector<FockVector> basis = fock_basis(w_max);
    bool plain_ok = true, alt_ok = true, boundary_ok = true;
    for (const FockVector& bv : basis) {
        FockElement v = FockElement::from(bv, 1);
        long long wv = bv.weight();
        for (int s = -s_abs; s <= s_abs; ++s) {
            int lo = static_cast<int>(s - wv) - 2;
            int hi = static_cast<int>(std::max<long long>(0, wv)) + 2;
            FockElement plain, alt;
            for (int i = lo; i <= hi; ++i) {
                FockElement t = apply_phi(i, apply_psi(s - i, v));
                if ((i == lo || i == hi) && !t.is_zero()) boundary_ok = false;
                plain += t;
                if (s % 2 != 0) {
                    if (i % 2 != 0) t *= mpq_class(-1);
                    alt += t;
                }
            }
            if (!plain.is_zero()) plain_ok = false;
            if (!alt.is_zero()) alt_ok = false;
        }
    }
    rep.note("basis vectors tested: " + std::to_string(basis.size()));
    rep.require("sum_i phi_i psi_{s-i} = 0", plain_ok);
    rep.require("sum_i (-1)^i phi_i psi_{s-i} = 0 (odd s)", alt_ok);
    rep.require("mode sums vanish outside the truncation range", boundary_ok);
    return rep;
}

CheckReport fock_character_check(const Window& w) {
    CheckReport rep;
    rep.name = "fock_character";
    LaurentQT lhs = fock_character(w);

    // fermionic factors, on a t-window wide enough that clamping only
    // drops terms the q-truncation discards anyway (as in the triple
    // product: t-degree a costs at least a(a-1)/2, -b at least b(b+1)/2)
    int a_big = 1;
    while (static_cast<long long>(a_big + 1) * a_big / 2 <= w.q_max) ++a_big;
    int b_big = 1;
    while (static_cast<long long>(b_big + 1) * (b_big + 2) / 2 <= w.q_max)
        ++b_big;
    Window wide(w.q_max, std::min(w.t_min, -b_big), std::max(w.t_max, a_big));
    LaurentQT prod = LaurentQT::one(wide);
    for (int j = 0; j <= w.q_max; ++j) {
        LaurentQT f = LaurentQT::one(wide);
        f.add_term(j, 1, 1);
        prod = prod.mul(f, wide);
    }
    for (int k = 1; k <= w.q_max; ++k) {
        LaurentQT f = LaurentQT::one(wide);
        f.add_term(k, -1, 1);
        prod = prod.mul(f, wide);
    }
    // bosonic factor: 1 / prod (1 - q^{2m+1})
    Window qw = Window::q_only(w.q_max);
    LaurentQT odd = LaurentQT::one(qw);
    for (int m = 1; m <= w.q_max; m += 2) {
        LaurentQT geom = LaurentQT::zero(qw);
        for (int e = 0; e * m <= w.q_max; ++e) geom.add_term(e * m, 0, 1);
        odd = odd.mul(geom, qw);
    }
    LaurentQT rhs = prod.mul(odd, w);
    rep.compare("enumerated character vs fermion x boson product on " + w.str(),
                lhs.str(), rhs.str(), LaurentQT::agree_on(lhs, rhs, w));
    LaurentQT closed = F_closed(w, StatModel::square);
    rep.compare("enumerated character vs closed statistical sum",
                lhs.str(), closed.str(), LaurentQT::agree_on(lhs, closed, w));
    return rep;
}

}  // namespace qladder
