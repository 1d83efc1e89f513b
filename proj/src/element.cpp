#include "qladder/element.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qladder {

std::string row_name(Row r) {
    switch (r) {
        case Row::X: return "x";
        case Row::Y: return "y";
        case Row::Z: return "z";
    }
    return "?";
}

Monomial::Monomial(std::vector<Generator> gens) : gens_(std::move(gens)) {
    for (size_t i = 1; i < gens_.size(); ++i)
        if (!(gens_[i - 1] < gens_[i]))
            throw std::invalid_argument("Monomial: word not canonical");
}

Monomial Monomial::single(Row r, int index) { return Monomial({{r, index}}); }

std::array<int, 3> Monomial::multidegree() const {
    std::array<int, 3> d{0, 0, 0};
    for (const auto& g : gens_) ++d[static_cast<int>(g.row)];
    return d;
}

long long Monomial::index_sum() const {
    long long s = 0;
    for (const auto& g : gens_) s += g.index;
    return s;
}

bool Monomial::contains(Generator g) const {
    return std::binary_search(gens_.begin(), gens_.end(), g);
}

Prod Monomial::mul(const Monomial& a, const Monomial& b) {
    // Merge the two canonical words; each element drawn from b jumps over
    // the remainder of a, so it contributes that many transpositions.
    std::vector<Generator> out;
    out.reserve(a.gens_.size() + b.gens_.size());
    size_t i = 0, j = 0;
    long long swaps = 0;
    while (i < a.gens_.size() && j < b.gens_.size()) {
        if (a.gens_[i] == b.gens_[j]) return {0, Monomial()};
        if (a.gens_[i] < b.gens_[j]) {
            out.push_back(a.gens_[i++]);
        } else {
            out.push_back(b.gens_[j++]);
            swaps += static_cast<long long>(a.gens_.size() - i);
        }
    }
    while (i < a.gens_.size()) out.push_back(a.gens_[i++]);
    while (j < b.gens_.size()) out.push_back(b.gens_[j++]);
    Monomial m;
    m.gens_ = std::move(out);
    return {swaps % 2 == 0 ? 1 : -1, m};
}

bool Monomial::operator<(const Monomial& o) const {
    if (gens_.size() != o.gens_.size()) return gens_.size() < o.gens_.size();
    return gens_ < o.gens_;
}

std::string Monomial::str() const {
    if (gens_.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << " ";
        os << row_name(gens_[i].row) << "[" << gens_[i].index << "]";
    }
    return os.str();
}

Element Element::unit() { return from(Monomial(), 1); }

Element Element::single(Row r, int index) {
    return from(Monomial::single(r, index), 1);
}

Element Element::from(const Monomial& m, const mpq_class& c) {
    Element e;
    e.add(m, c);
    return e;
}

mpq_class Element::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void Element::add(const Monomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

Element& Element::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [m, v] : terms_) v *= c;
    }
    return *this;
}

Element Element::mul(const Element& o) const {
    Element r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            auto p = Monomial::mul(ma, mb);
            if (p.sign != 0) r.add(p.mono, ca * cb * p.sign);
        }
    return r;
}

int Element::degree() const {
    if (terms_.empty()) throw std::logic_error("degree of zero element");
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) throw std::logic_error("element not homogeneous");
    return d;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        mpq_class a = c;
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
        bool unit_coeff = (a == 1) && m.degree() > 0;
        if (!unit_coeff) os << a.get_str();
        if (m.degree() > 0) {
            if (!unit_coeff) os << " ";
            os << m.str();
        }
    }
    return os.str();
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator-(Element a) { return a *= mpq_class(-1); }
Element operator*(Element a, const mpq_class& c) { return a *= c; }
Element operator*(const Element& a, const Element& b) { return a.mul(b); }

}  // namespace qladder
