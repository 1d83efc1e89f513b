#include "qladder/split_complex.hpp"

#include <sstream>
#include <stdexcept>

namespace qladder {

namespace {

int edge_label(const Monomial& m, int col) {
    if (m.contains({Row::X, col})) return 1;
    if (m.contains({Row::Y, col})) return 2;
    return 0;
}

std::string piece_name(int a, int b) {
    auto nm = [](int l) { return l == 0 ? "-" : (l == 1 ? "x" : "y"); };
    return std::string("K(") + nm(a) + "," + nm(b) + ")";
}

/// Matrix product of consecutive differentials is zero.
bool square_zero(const ChainComplex& c) {
    for (size_t d = 0; d + 1 < c.D.size(); ++d)
        for (const auto& col : c.D[d]) {
            std::map<int, mpq_class> y;
            for (const auto& [i, v] : col)
                for (const auto& [i2, v2] : c.D[d + 1][i]) y[i2] += v * v2;
            for (const auto& [i2, v2] : y)
                if (v2 != 0) return false;
        }
    return true;
}

}  // namespace

SplitPieces split_complex(int k, int threads) {
    if (k < 1) throw std::invalid_argument("split_complex: k >= 1");
    int n = 2 * k + 1;
    SplitPieces sp;
    sp.k = k;
    sp.parent = build_deformed_complex(AlgebraKind::deformed_square,
                                       IndexWindow::centered(n), threads);
    const DeformedComplex& dc = sp.parent;
    int top = static_cast<int>(dc.c.dims.size());
    sp.structure.name = "split_structure";

    // classify the parent basis, per degree
    struct Loc {
        int a, b, local;
    };
    std::vector<std::vector<Loc>> loc(top);
    std::array<std::array<std::vector<std::vector<int>>, 3>, 3> members{};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            members[a][b].resize(top);
            sp.piece[a][b].dims.assign(top, 0);
            sp.piece[a][b].D.resize(top);
        }
    for (int d = 0; d < top; ++d) {
        loc[d].resize(dc.q.basis[d].size());
        for (size_t j = 0; j < dc.q.basis[d].size(); ++j) {
            const Monomial& m = dc.q.basis[d][j];
            int a = edge_label(m, -k);
            int b = edge_label(m, k);
            loc[d][j] = {a, b,
                         static_cast<int>(members[a][b][d].size())};
            members[a][b][d].push_back(static_cast<int>(j));
        }
    }
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int d = 0; d < top; ++d) {
                sp.piece[a][b].dims[d] =
                    static_cast<long long>(members[a][b][d].size());
                sp.piece[a][b].D[d].resize(members[a][b][d].size());
            }

    // the differential never loses an extreme factor
    bool triangular = true;
    for (int d = 0; d + 1 < top; ++d)
        for (size_t j = 0; j < dc.c.D[d].size(); ++j) {
            const Loc& from = loc[d][j];
            for (const auto& [i, v] : dc.c.D[d][j]) {
                const Loc& to = loc[d + 1][i];
                bool gains_only = (from.a == to.a || from.a == 0) &&
                                  (from.b == to.b || from.b == 0);
                if (!gains_only) triangular = false;
                if (from.a == to.a && from.b == to.b)
                    sp.piece[from.a][from.b].D[d][from.local][to.local] = v;
            }
        }
    sp.structure.require("extreme factors are never removed", triangular);

    bool diag_sq = true;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (!square_zero(sp.piece[a][b])) diag_sq = false;
    sp.structure.require("diagonal blocks square to zero", diag_sq);
    return sp;
}

CheckReport split_complex_check(int k, int threads) {
    CheckReport rep;
    rep.name = "split_complex(" + std::to_string(k) + ")";
    SplitPieces sp = split_complex(k, threads);
    rep.merge(sp.structure);

    // corner pieces: a single class at degree k+1 when the parity matches
    bool even = (k % 2 == 0);
    auto corner = [&](int a, int b, bool carries) {
        CohomologyReport co = cohomology(sp.piece[a][b]);
        rep.merge(co.checks);
        rep.compare(piece_name(a, b) + " total cohomology",
                    std::to_string(co.total_h()), carries ? "1" : "0",
                    co.total_h() == (carries ? 1 : 0));
        if (carries)
            rep.compare(piece_name(a, b) + " class sits in degree k+1",
                        std::to_string(co.h[k + 1]), "1", co.h[k + 1] == 1);
    };
    corner(1, 1, even);
    corner(2, 2, even);
    corner(1, 2, !even);
    corner(2, 1, !even);

    // half-divisible pieces are acyclic
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if ((a == 0) == (b == 0)) continue;
            CohomologyReport co = cohomology(sp.piece[a][b]);
            rep.merge(co.checks);
            rep.compare(piece_name(a, b) + " total cohomology",
                        std::to_string(co.total_h()), "0", co.total_h() == 0);
        }

    // the distinguished cocycles land in their corner pieces and survive
    int n = 2 * k + 1;
    const DeformedComplex& dc = sp.parent;
    auto in_piece = [&](const Element& v, int a, int b) {
        for (const auto& [m, c] : v.terms())
            if (edge_label(m, -k) != a || edge_label(m, k) != b) return false;
        return true;
    };
    Element lo = cocycle_y(n);
    Element hi = cocycle_x(n);
    rep.require("y-cocycle is its own normal form",
                (dc.q.normal_form(lo) - lo).is_zero());
    rep.require("y-cocycle lies in " + piece_name(even ? 2 : 1, 2),
                in_piece(lo, even ? 2 : 1, 2));
    rep.require("x-cocycle lies in " + piece_name(even ? 1 : 2, 1),
                in_piece(hi, even ? 1 : 2, 1));
    rep.merge(class_check(dc, lo));
    rep.merge(class_check(dc, hi));

    // the doubly-plain piece is the complex on 2k-1 columns, matrix for
    // matrix (its basis is exactly the admissible monomials of the narrower
    // window, in the same order)
    DeformedComplex inner = build_deformed_complex(
        AlgebraKind::deformed_square, IndexWindow::centered(2 * k - 1),
        threads);
    const ChainComplex& box = sp.piece[0][0];
    int itop = static_cast<int>(inner.c.dims.size());
    bool dims_match = true;
    for (int d = 0; d < static_cast<int>(box.dims.size()); ++d) {
        long long want = (d < itop) ? inner.c.dims[d] : 0;
        if (box.dims[d] != want) dims_match = false;
    }
    rep.require("plain piece has the dimensions of the narrower complex",
                dims_match);
    bool mats_match = dims_match;
    if (dims_match)
        for (int d = 0; d + 1 < itop; ++d)
            for (size_t j = 0; j < inner.c.D[d].size(); ++j)
                if (box.D[d][j] != inner.c.D[d][j]) mats_match = false;
    rep.require("plain piece differential equals the narrower one",
                mats_match);
    return rep;
}

}  // namespace qladder
