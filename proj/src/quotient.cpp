#include "qladder/quotient.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qladder/lattice.hpp"

namespace qladder {

namespace {

GradedQuotient::BlockKey key_of(const Monomial& m) {
    return {m.multidegree(), m.index_sum()};
}

struct RelationInfo {
    Element rel;
    std::array<int, 3> mdeg;
    long long esum;
};

std::vector<RelationInfo> relation_infos(AlgebraKind k, const IndexWindow& w) {
    std::vector<RelationInfo> out;
    for (auto& r : relation_set(k, w)) {
        const Monomial& m0 = r.terms().begin()->first;
        RelationInfo info{r, m0.multidegree(), m0.index_sum()};
        for (const auto& [m, c] : r.terms())
            if (m.multidegree() != info.mdeg || m.index_sum() != info.esum)
                throw std::logic_error("relation not homogeneous");
        out.push_back(std::move(info));
    }
    return out;
}

void run_parallel(int threads, int jobs, const std::function<void(int)>& fn) {
    if (threads <= 1 || jobs <= 1) {
        for (int i = 0; i < jobs; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    int nt = std::min(threads, jobs);
    for (int t = 0; t < nt; ++t)
        pool.emplace_back([&]() {
            for (int i = next.fetch_add(1); i < jobs; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace

std::vector<long long> GradedQuotient::dims() const {
    std::vector<long long> d(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) d[i] = static_cast<long long>(basis[i].size());
    return d;
}

Element GradedQuotient::normal_form(const Element& e) const {
    // split by block, reduce each piece against that block's RREF
    std::map<BlockKey, std::map<int, mpq_class>> pieces;
    std::map<BlockKey, const Block*> used;
    for (const auto& [m, c] : e.terms()) {
        BlockKey k = key_of(m);
        auto it = blocks.find(k);
        if (it == blocks.end()) throw std::invalid_argument("normal_form: monomial outside window");
        const Block& b = it->second;
        auto pos = std::find(b.cols.begin(), b.cols.end(), m);
        if (pos == b.cols.end()) throw std::logic_error("normal_form: column lookup failed");
        pieces[k][static_cast<int>(pos - b.cols.begin())] += c;
        used[k] = &b;
    }
    Element out;
    for (auto& [k, vec] : pieces) {
        const Block& b = *used[k];
        b.rref.reduce(vec);
        for (const auto& [col, c] : vec) out.add(b.cols[col], c);
    }
    return out;
}

bool GradedQuotient::pivots_avoid_admissible() const {
    for (const auto& [k, b] : blocks)
        for (int p : b.rref.pivots)
            if (p >= b.n_nonadmissible) return false;
    return true;
}

GradedQuotient graded_quotient(AlgebraKind k, const IndexWindow& w, int threads) {
    int ngen = rows_of(k) * w.size();
    if (ngen > 20)
        throw std::invalid_argument("graded_quotient: window too large");
    GradedQuotient q;
    q.kind = k;
    q.window = w;
    q.basis.resize(ngen + 1);

    // bucket every monomial of every degree by (multidegree, index sum),
    // non-admissible before admissible, monomial order inside each part
    std::map<GradedQuotient::BlockKey, GradedQuotient::Block> blocks;
    for (int d = 0; d <= ngen; ++d) {
        for (auto adm : {false, true}) {
            std::vector<Monomial> ms = adm ? admissible_monomials(k, w, d)
                                           : all_monomials(k, w, d);
            for (const auto& m : ms) {
                bool is_adm = admissible(k, m);
                if (adm != is_adm) continue;
                auto& b = blocks[key_of(m)];
                b.cols.push_back(m);
                if (!adm) ++b.n_nonadmissible;
            }
        }
    }
    // the two sweeps above appended non-admissible first only per degree;
    // blocks are degree-pure (multidegree fixes the degree), so order holds.

    auto rels = relation_infos(k, w);
    std::vector<GradedQuotient::BlockKey> keys;
    for (const auto& [key, b] : blocks) keys.push_back(key);

    run_parallel(threads, static_cast<int>(keys.size()), [&](int ki) {
        const auto& key = keys[ki];
        GradedQuotient::Block& b = blocks.at(key);
        std::map<Monomial, int> col_of;
        for (size_t i = 0; i < b.cols.size(); ++i)
            col_of.emplace(b.cols[i], static_cast<int>(i));
        std::vector<RowQ> rows;
        for (const auto& info : rels) {
            std::array<int, 3> md;
            bool fits = true;
            for (int i = 0; i < 3; ++i) {
                md[i] = key.first[i] - info.mdeg[i];
                if (md[i] < 0) fits = false;
            }
            if (!fits) continue;
            auto hit = blocks.find({md, key.second - info.esum});
            if (hit == blocks.end()) continue;
            for (const auto& m : hit->second.cols) {
                std::map<int, mpq_class> entries;
                for (const auto& [rm, rc] : info.rel.terms()) {
                    auto p = Monomial::mul(m, rm);
                    if (p.sign == 0) continue;
                    entries[col_of.at(p.mono)] += mpq_class(p.sign) * rc;
                }
                RowQ row;
                for (auto& [c, v] : entries)
                    if (v != 0) row.push_back({c, v});
                if (!row.empty()) rows.push_back(std::move(row));
            }
        }
        b.rref = certified_rref(rows, static_cast<int>(b.cols.size()));
    });

    for (auto& [key, b] : blocks) {
        int d = key.first[0] + key.first[1] + key.first[2];
        size_t pi = 0;
        for (size_t c = 0; c < b.cols.size(); ++c) {
            if (pi < b.rref.pivots.size() && b.rref.pivots[pi] == static_cast<int>(c)) {
                ++pi;
                continue;
            }
            q.basis[d].push_back(b.cols[c]);
        }
    }
    for (auto& bd : q.basis) std::sort(bd.begin(), bd.end());
    q.blocks = std::move(blocks);
    return q;
}

CheckReport quotient_dimension_check(int n, unsigned seed, int threads, int samples) {
    CheckReport rep;
    rep.name = "quotient_dimensions(n=" + std::to_string(n) + ")";
    IndexWindow w = IndexWindow::centered(n);
    GradedQuotient q = graded_quotient(AlgebraKind::deformed_square, w, threads);

    rep.require("pivots avoid admissible monomials", q.pivots_avoid_admissible());

    // admissible counts, by independent re-enumeration
    std::ostringstream dq, da, dl;
    std::vector<long long> dims = q.dims();
    bool basis_is_admissible = true;
    for (size_t d = 0; d < dims.size(); ++d) {
        auto adm = admissible_monomials(AlgebraKind::deformed_square, w,
                                        static_cast<int>(d));
        if (q.basis[d] != adm) basis_is_admissible = false;
        dq << (d ? "," : "") << dims[d];
        da << (d ? "," : "") << adm.size();
    }
    rep.compare("quotient dims vs admissible counts", dq.str(), da.str(),
                dq.str() == da.str());
    rep.require("basis monomials are the admissible ones", basis_is_admissible);

    // cross-module: particle counts of the companion lattice
    auto counts = independence_counts(LatticeModel::twisted_square(n));
    for (size_t d = 0; d < dims.size(); ++d) {
        mpz_class c = d < counts.size() ? counts[d] : mpz_class(0);
        dl << (d ? "," : "") << c.get_str();
    }
    rep.compare("quotient dims vs lattice particle counts", dq.str(), dl.str(),
                dq.str() == dl.str());

    // seeded reduction laws
    std::mt19937 rng(seed);
    auto rels = relation_set(AlgebraKind::deformed_square, w);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> pick_deg(0, rows_of(q.kind) * w.size());
    bool idem = true, invariant = true, identity = true;
    for (int s = 0; s < samples; ++s) {
        // random homogeneous-degree element: a few random monomials
        int d = pick_deg(rng) % (2 * n);  // keep degrees where blocks are nontrivial
        auto pool = all_monomials(AlgebraKind::deformed_square, w, d);
        if (pool.empty()) continue;
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        Element e;
        for (int t = 0; t < 4; ++t) e.add(pool[pick(rng)], coeff(rng));
        Element nf = q.normal_form(e);
        if (!(q.normal_form(nf) - nf).is_zero()) idem = false;
        // adding an ideal element must not change the normal form
        const Element& r = rels[s % rels.size()];
        int rd = r.degree();
        if (d >= rd) {
            auto mpool = all_monomials(AlgebraKind::deformed_square, w, d - rd);
            if (!mpool.empty()) {
                std::uniform_int_distribution<size_t> mp(0, mpool.size() - 1);
                Element shifted = e + Element::from(mpool[mp(rng)], 1) * r;
                if (!(q.normal_form(shifted) - nf).is_zero()) invariant = false;
            }
        }
    }
    for (size_t d = 0; d < q.basis.size() && identity; ++d)
        for (const auto& m : q.basis[d]) {
            Element e = Element::from(m, 1);
            if (!(q.normal_form(e) - e).is_zero()) {
                identity = false;
                break;
            }
        }
    rep.require("normal form is idempotent on " + std::to_string(samples) + " samples", idem);
    rep.require("normal form kills ideal shifts", invariant);
    rep.require("normal form fixes basis monomials", identity);
    return rep;
}

CheckReport quotient_tri3_report(int n, int threads) {
    CheckReport rep;
    rep.name = "quotient_tri3(n=" + std::to_string(n) + ")";
    IndexWindow w = IndexWindow::centered(n);
    GradedQuotient q = graded_quotient(AlgebraKind::deformed_tri3, w, threads);
    std::ostringstream dq, da;
    auto dims = q.dims();
    for (size_t d = 0; d < dims.size(); ++d) {
        auto adm = admissible_monomials(AlgebraKind::deformed_tri3, w,
                                        static_cast<int>(d));
        dq << (d ? "," : "") << dims[d];
        da << (d ? "," : "") << adm.size();
    }
    rep.note("dims: " + dq.str());
    rep.note("admissible counts: " + da.str());
    rep.note(std::string("pivots avoid admissible: ") +
             (q.pivots_avoid_admissible() ? "yes" : "no"));
    return rep;
}

}  // namespace qladder
