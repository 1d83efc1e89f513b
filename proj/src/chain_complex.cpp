#include "qladder/chain_complex.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace qladder {

namespace {

/// Index of m in the sorted basis list, or -1.
int basis_index(const std::vector<Monomial>& basis, const Monomial& m) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || !(*it == m)) return -1;
    return static_cast<int>(it - basis.begin());
}

void prune(std::map<int, mpq_class>& v) {
    for (auto it = v.begin(); it != v.end();)
        it = (it->second == 0) ? v.erase(it) : std::next(it);
}

/// y += c * col
void axpy(std::map<int, mpq_class>& y, const mpq_class& c,
          const std::map<int, mpq_class>& col) {
    for (const auto& [i, v] : col) y[i] += c * v;
}

RowQ to_row(const std::map<int, mpq_class>& col) {
    RowQ r;
    r.reserve(col.size());
    for (const auto& [i, v] : col) r.emplace_back(i, v);
    return r;
}

}  // namespace

std::map<int, mpq_class> DeformedComplex::coords(const Element& v,
                                                 int degree) const {
    std::map<int, mpq_class> out;
    for (const auto& [m, cf] : v.terms()) {
        if (m.degree() != degree)
            throw std::invalid_argument("coords: mixed degrees");
        int j = basis_index(q.basis[degree], m);
        if (j < 0)
            throw std::invalid_argument("coords: " + m.str() +
                                        " is not a basis monomial");
        out[j] = cf;
    }
    return out;
}

DeformedComplex build_deformed_complex(AlgebraKind k, const IndexWindow& w,
                                       int threads) {
    if (!w.contains(0))
        throw std::invalid_argument("complex needs the index-0 generators");
    DeformedComplex dc{k, w, graded_quotient(k, w, threads), {}, {}};
    for (int r = 0; r < rows_of(k); ++r)
        dc.d_element += Element::single(static_cast<Row>(r), 0);

    const auto& basis = dc.q.basis;
    int top = static_cast<int>(basis.size());
    dc.c.dims.resize(top);
    dc.c.D.resize(top);
    for (int d = 0; d < top; ++d) {
        dc.c.dims[d] = static_cast<long long>(basis[d].size());
        dc.c.D[d].resize(basis[d].size());
        for (size_t j = 0; j < basis[d].size(); ++j) {
            Element im = dc.q.normal_form(
                dc.d_element * Element::from(basis[d][j], 1));
            if (im.is_zero()) continue;
            dc.c.D[d][j] = dc.coords(im, d + 1);
        }
    }
    return dc;
}

ChainComplex build_fermion_complex(const LatticeModel& m) {
    int n = m.vertex_count();
    if (n > 20)
        throw std::invalid_argument("fermion complex: lattice too large");
    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& [a, b] : m.edges) {
        adj[a] |= 1u << b;
        adj[b] |= 1u << a;
    }
    // independent sets, bucketed by size, each bucket sorted by mask
    std::vector<std::vector<std::uint32_t>> sets(n + 1);
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if ((s >> v & 1u) && (adj[v] & s)) ok = false;
        if (ok) sets[static_cast<int>(std::popcount(s))].push_back(s);
    }
    int top = n + 1;
    while (top > 1 && sets[top - 1].empty()) --top;

    ChainComplex c;
    c.dims.resize(top);
    c.D.resize(top);
    for (int d = 0; d < top; ++d) {
        c.dims[d] = static_cast<long long>(sets[d].size());
        c.D[d].resize(sets[d].size());
        if (d + 1 >= top) continue;
        for (size_t j = 0; j < sets[d].size(); ++j) {
            std::uint32_t s = sets[d][j];
            for (int v = 0; v < n; ++v) {
                if (s >> v & 1u) continue;
                if (adj[v] & s) continue;
                std::uint32_t t = s | (1u << v);
                auto& bucket = sets[d + 1];
                int i = static_cast<int>(
                    std::lower_bound(bucket.begin(), bucket.end(), t) -
                    bucket.begin());
                int before = std::popcount(s & ((1u << v) - 1u));
                c.D[d][j][i] = (before % 2 == 0) ? 1 : -1;
            }
        }
    }
    return c;
}

long long CohomologyReport::total_h() const {
    long long t = 0;
    for (long long v : h) t += v;
    return t;
}

std::string CohomologyReport::h_str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << h[i];
    os << ")";
    return os.str();
}

CohomologyReport cohomology(const ChainComplex& c) {
    CohomologyReport rep;
    rep.checks.name = "cohomology";
    rep.dims = c.dims;
    int top = static_cast<int>(c.dims.size());

    // d^2 == 0, composed at the matrix level
    bool square_zero = true;
    for (int d = 0; d + 1 < top && square_zero; ++d)
        for (const auto& col : c.D[d]) {
            std::map<int, mpq_class> y;
            for (const auto& [i, v] : col) axpy(y, v, c.D[d + 1][i]);
            prune(y);
            if (!y.empty()) {
                square_zero = false;
                break;
            }
        }
    rep.checks.require("d^2 == 0", square_zero);

    rep.ranks.resize(top, 0);
    for (int d = 0; d < top; ++d) {
        std::vector<RowQ> rows;
        rows.reserve(c.D[d].size());
        for (const auto& col : c.D[d])
            if (!col.empty()) rows.push_back(to_row(col));
        int width = (d + 1 < top) ? static_cast<int>(c.dims[d + 1]) : 0;
        rep.ranks[d] = rows.empty() ? 0 : certified_rank(rows, width);
    }

    rep.h.resize(top, 0);
    rep.euler = 0;
    bool nonneg = true;
    for (int d = 0; d < top; ++d) {
        rep.h[d] = c.dims[d] - rep.ranks[d] - (d ? rep.ranks[d - 1] : 0);
        if (rep.h[d] < 0) nonneg = false;
        long sgn_dim = static_cast<long>(c.dims[d]);
        rep.euler += (d % 2 == 0) ? sgn_dim : -sgn_dim;
    }
    rep.checks.require("kernel/image dimensions consistent", nonneg);
    return rep;
}

Element cocycle_y(int n) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("cocycle_y: odd window required");
    int k = (n - 1) / 2;
    if (k == 0) return Element::single(Row::Y, 0);
    if (k == 1)
        return Element::single(Row::X, -1) * Element::single(Row::Y, 1);
    Row left = (k % 2 != 0) ? Row::X : Row::Y;
    return Element::single(left, -k) * cocycle_y(n - 4) *
           Element::single(Row::Y, k);
}

Element cocycle_x(int n) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("cocycle_x: odd window required");
    int k = (n - 1) / 2;
    if (k == 0) return Element::single(Row::X, 0);
    if (k == 1)
        return Element::single(Row::Y, -1) * Element::single(Row::X, 1);
    Row left = (k % 2 != 0) ? Row::Y : Row::X;
    return Element::single(left, -k) * cocycle_x(n - 4) *
           Element::single(Row::X, k);
}

CheckReport class_check(const DeformedComplex& dc, const Element& v) {
    CheckReport rep;
    rep.name = "class_check";
    Element nf = dc.q.normal_form(v);
    rep.require("representative nonzero in the quotient", !nf.is_zero());
    if (nf.is_zero()) return rep;

    int deg = nf.degree();
    auto vec = dc.coords(nf, deg);

    std::map<int, mpq_class> img;
    for (const auto& [j, cf] : vec) axpy(img, cf, dc.c.D[deg][j]);
    prune(img);
    rep.require("cocycle: D v == 0 exactly", img.empty());

    // not a coboundary: the rank of the previous image must grow by one
    std::vector<RowQ> rows;
    if (deg > 0)
        for (const auto& col : dc.c.D[deg - 1])
            if (!col.empty()) rows.push_back(to_row(col));
    int width = static_cast<int>(dc.c.dims[deg]);
    int r0 = rows.empty() ? 0 : certified_rank(rows, width);
    rows.push_back(to_row(vec));
    int r1 = certified_rank(rows, width);
    rep.compare("rank after appending v", std::to_string(r1),
                std::to_string(r0 + 1), r1 == r0 + 1);
    return rep;
}

}  // namespace qladder
