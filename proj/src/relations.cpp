#include "qladder/relations.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace qladder {

IndexWindow::IndexWindow(int l, int h) : lo(l), hi(h) {
    if (l > h) throw std::invalid_argument("IndexWindow: lo > hi");
}

IndexWindow IndexWindow::centered(int n) {
    if (n < 1) throw std::invalid_argument("IndexWindow::centered: n >= 1");
    int lo = -(n / 2);
    return IndexWindow(lo, lo + n - 1);
}

int rows_of(AlgebraKind k) {
    return (k == AlgebraKind::fermion_tri3 || k == AlgebraKind::deformed_tri3) ? 3 : 2;
}

bool is_deformed(AlgebraKind k) {
    return k == AlgebraKind::deformed_square || k == AlgebraKind::deformed_tri3;
}

bool generators_clash(AlgebraKind k, Generator a, Generator b) {
    if (rows_of(k) == 2) {
        // only cross-row pairs interact: x_i y_j with |i-j| <= 1
        if (a.row == b.row) return false;
        return std::abs(a.index - b.index) <= 1;
    }
    // three rows: same-column triangle, same-row neighbors, and the cyclic
    // diagonals x->y, y->z, z->x into the next column
    if (a.row == b.row) return std::abs(a.index - b.index) == 1;
    if (a.index == b.index) return true;
    Generator lo = a, hi = b;
    if (hi.index < lo.index) std::swap(lo, hi);
    if (hi.index != lo.index + 1) return false;
    int from = static_cast<int>(lo.row), to = static_cast<int>(hi.row);
    return to == (from + 1) % 3;
}

namespace {

// plain sum_i a_i b_{s-i} or alternating sum_i (-1)^i a_i b_{s-i}
Element cross_relation(Row ra, Row rb, int s, bool alternating, const IndexWindow& w) {
    Element e;
    for (int i = w.lo; i <= w.hi; ++i) {
        int j = s - i;
        if (!w.contains(j)) continue;
        auto p = Monomial::mul(Monomial::single(ra, i), Monomial::single(rb, j));
        if (p.sign == 0) continue;  // i == j on the same row
        mpq_class c = p.sign;
        if (alternating && (i % 2 != 0)) c = -c;
        e.add(p.mono, c);
    }
    return e;
}

// same-row alternating sum over unordered pairs i < s-i, odd s
Element samerow_alternating(Row r, int s, const IndexWindow& w) {
    Element e;
    for (int i = w.lo; i <= w.hi; ++i) {
        int j = s - i;
        if (j <= i || !w.contains(j)) continue;
        auto p = Monomial::mul(Monomial::single(r, i), Monomial::single(r, j));
        e.add(p.mono, mpq_class((i % 2 == 0) ? 1 : -1) * p.sign);
    }
    return e;
}

}  // namespace

std::vector<Element> relation_set(AlgebraKind k, const IndexWindow& w) {
    std::vector<Element> rels;
    auto push = [&rels](Element e) {
        if (!e.is_zero()) rels.push_back(std::move(e));
    };
    if (!is_deformed(k)) {
        std::vector<Generator> gens;
        for (int r = 0; r < rows_of(k); ++r)
            for (int i = w.lo; i <= w.hi; ++i) gens.push_back({static_cast<Row>(r), i});
        for (size_t a = 0; a < gens.size(); ++a)
            for (size_t b = a + 1; b < gens.size(); ++b)
                if (generators_clash(k, gens[a], gens[b]))
                    push(Element::from(Monomial({gens[a], gens[b]}), 1));
        return rels;
    }
    std::vector<std::pair<Row, Row>> cross =
        (k == AlgebraKind::deformed_square)
            ? std::vector<std::pair<Row, Row>>{{Row::X, Row::Y}}
            : std::vector<std::pair<Row, Row>>{
                  {Row::X, Row::Y}, {Row::Y, Row::Z}, {Row::Z, Row::X}};
    for (int s = 2 * w.lo; s <= 2 * w.hi; ++s) {
        for (auto [ra, rb] : cross) {
            push(cross_relation(ra, rb, s, false, w));
            if (s % 2 != 0) push(cross_relation(ra, rb, s, true, w));
        }
        if (k == AlgebraKind::deformed_tri3 && s % 2 != 0)
            for (int r = 0; r < 3; ++r)
                push(samerow_alternating(static_cast<Row>(r), s, w));
    }
    return rels;
}

bool admissible(AlgebraKind k, const Monomial& m) {
    const auto& g = m.gens();
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j)
            if (generators_clash(k, g[i], g[j])) return false;
    return true;
}

namespace {

void enumerate_rec(AlgebraKind k, const IndexWindow& w, int degree,
                   std::vector<Generator>& cur, Generator min_next,
                   bool admissible_only, std::vector<Monomial>& out) {
    if (static_cast<int>(cur.size()) == degree) {
        out.push_back(Monomial(cur));
        return;
    }
    int nr = rows_of(k);
    for (int r = static_cast<int>(min_next.row); r < nr; ++r)
        for (int i = (r == static_cast<int>(min_next.row) ? min_next.index : w.lo);
             i <= w.hi; ++i) {
            Generator g{static_cast<Row>(r), i};
            if (admissible_only) {
                bool ok = true;
                for (const auto& h : cur)
                    if (generators_clash(k, h, g)) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
            }
            cur.push_back(g);
            enumerate_rec(k, w, degree, cur, {g.row, g.index + 1}, admissible_only, out);
            cur.pop_back();
        }
}

std::vector<Monomial> enumerate(AlgebraKind k, const IndexWindow& w, int degree,
                                bool admissible_only) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    std::vector<Generator> cur;
    enumerate_rec(k, w, degree, cur, {Row::X, w.lo}, admissible_only, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Monomial> admissible_monomials(AlgebraKind k, const IndexWindow& w,
                                           int degree) {
    return enumerate(k, w, degree, true);
}

std::vector<Monomial> all_monomials(AlgebraKind k, const IndexWindow& w, int degree) {
    return enumerate(k, w, degree, false);
}

}  // namespace qladder
