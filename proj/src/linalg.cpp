#include "qladder/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qladder {

RankStats& rank_stats() {
    static RankStats stats;
    return stats;
}

namespace {

constexpr std::uint64_t kPrimes[] = {2147483647, 2147483629, 2147483587,
                                     2147483579, 2147483563, 2147483549};
constexpr int kPrimeCount = 6;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((__uint128_t)a * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// mpq -> residue; false if the denominator vanishes mod p
bool residue(const mpq_class& v, std::uint64_t p, std::uint64_t& out) {
    mpz_class num = v.get_num() % static_cast<long>(p);
    mpz_class den = v.get_den() % static_cast<long>(p);
    std::uint64_t d = mpz_class(den).get_ui();
    if (d == 0) return false;
    long n = num.get_si();
    std::uint64_t nn = n >= 0 ? static_cast<std::uint64_t>(n)
                              : p - static_cast<std::uint64_t>(-n);
    out = mulmod(nn % p, powmod(d, p - 2, p), p);
    return true;
}

struct ModElim {
    std::uint64_t p;
    int width;
    // pivot rows stored sparse, indexed by lead column; empty = no pivot
    std::vector<std::vector<std::pair<int, std::uint64_t>>> piv;
    std::vector<std::uint64_t> buf;  // dense scratch

    explicit ModElim(std::uint64_t prime, int w) : p(prime), width(w), piv(w), buf(w, 0) {}

    /// Returns true (and records a pivot) if the row was independent.
    /// Throws if a denominator collides with p; caller rotates the prime.
    bool add_row(const RowQ& row) {
        int lo = width;
        for (const auto& [c, v] : row) {
            std::uint64_t r;
            if (!residue(v, p, r)) throw std::overflow_error("prime hits denominator");
            buf[c] = r;
            lo = std::min(lo, c);
        }
        int lead = -1;
        for (int c = lo; c < width; ++c) {
            if (buf[c] == 0) continue;
            if (piv[c].empty()) {
                lead = c;
                break;
            }
            std::uint64_t f = buf[c];
            for (const auto& [cc, vv] : piv[c]) {
                std::uint64_t sub = mulmod(f, vv, p);
                buf[cc] = buf[cc] >= sub ? buf[cc] - sub : buf[cc] + p - sub;
            }
        }
        if (lead < 0) {
            for (int c = lo; c < width; ++c) buf[c] = 0;
            return false;
        }
        std::uint64_t inv = powmod(buf[lead], p - 2, p);
        std::vector<std::pair<int, std::uint64_t>> stored;
        for (int c = lead; c < width; ++c) {
            if (buf[c] != 0) stored.push_back({c, mulmod(buf[c], inv, p)});
            buf[c] = 0;
        }
        for (int c = lo; c < lead; ++c) buf[c] = 0;
        piv[lead] = std::move(stored);
        return true;
    }
};

// Exact insertion elimination; returns echelon rows keyed by lead column.
std::map<int, std::map<int, mpq_class>> exact_echelon(
    const std::vector<RowQ>& rows, const std::vector<int>* select) {
    std::map<int, std::map<int, mpq_class>> piv;  // lead -> row
    auto feed = [&piv](const RowQ& r) {
        std::map<int, mpq_class> row(r.begin(), r.end());
        while (!row.empty()) {
            int lead = row.begin()->first;
            auto it = piv.find(lead);
            if (it == piv.end()) {
                mpq_class inv = 1 / row.begin()->second;
                for (auto& [c, v] : row) v *= inv;
                piv.emplace(lead, std::move(row));
                break;
            }
            mpq_class f = row.begin()->second;
            for (const auto& [c, v] : it->second) {
                auto jt = row.find(c);
                mpq_class nv = (jt == row.end() ? mpq_class(0) : jt->second) - f * v;
                if (nv == 0) {
                    if (jt != row.end()) row.erase(jt);
                } else if (jt == row.end()) {
                    row.emplace(c, nv);
                } else {
                    jt->second = nv;
                }
            }
        }
    };
    if (select) {
        for (int idx : *select) feed(rows[idx]);
    } else {
        for (const auto& r : rows) feed(r);
    }
    return piv;
}

RrefQ back_substitute(std::map<int, std::map<int, mpq_class>> echelon, int width) {
    RrefQ out;
    out.width = width;
    // highest lead first: clear its column from every earlier row
    for (auto it = echelon.rbegin(); it != echelon.rend(); ++it) {
        int lead = it->first;
        for (auto jt = echelon.begin(); jt->first != lead; ++jt) {
            auto hit = jt->second.find(lead);
            if (hit == jt->second.end()) continue;
            mpq_class f = hit->second;
            for (const auto& [c, v] : it->second) {
                auto kt = jt->second.find(c);
                mpq_class nv = (kt == jt->second.end() ? mpq_class(0) : kt->second) - f * v;
                if (nv == 0) {
                    if (kt != jt->second.end()) jt->second.erase(kt);
                } else if (kt == jt->second.end()) {
                    jt->second.emplace(c, nv);
                } else {
                    kt->second = nv;
                }
            }
        }
    }
    for (auto& [lead, row] : echelon) {
        out.pivots.push_back(lead);
        RowQ r(row.begin(), row.end());
        out.rows.push_back(std::move(r));
    }
    return out;
}

struct ModPass {
    int rank = 0;
    std::vector<int> selected;
};

ModPass mod_pass(const std::vector<RowQ>& rows, int width, std::uint64_t p,
                 bool record) {
    ModElim elim(p, width);
    ModPass out;
    for (size_t i = 0; i < rows.size(); ++i)
        if (elim.add_row(rows[i])) {
            ++out.rank;
            if (record) out.selected.push_back(static_cast<int>(i));
        }
    return out;
}

}  // namespace

bool RrefQ::is_pivot(int col) const {
    return std::binary_search(pivots.begin(), pivots.end(), col);
}

void RrefQ::reduce(std::map<int, mpq_class>& vec) const {
    // rows are in RREF, so one sweep in lead order clears every pivot column
    for (const auto& row : rows) {
        auto it = vec.find(row.front().first);
        if (it == vec.end() || it->second == 0) continue;
        mpq_class f = it->second;
        for (const auto& [c, v] : row) {
            auto jt = vec.find(c);
            mpq_class nv = (jt == vec.end() ? mpq_class(0) : jt->second) - f * v;
            if (nv == 0) {
                if (jt != vec.end()) vec.erase(jt);
            } else if (jt == vec.end()) {
                vec.emplace(c, nv);
            } else {
                jt->second = nv;
            }
        }
    }
}

RrefQ certified_rref(const std::vector<RowQ>& rows, int width) {
    auto& stats = rank_stats();
    stats.computations.fetch_add(1, std::memory_order_relaxed);
    if (rows.empty() || width == 0) {
        RrefQ empty;
        empty.width = width;
        return empty;
    }
    for (int attempt = 0; attempt + 1 < kPrimeCount; ++attempt) {
        try {
            ModPass a = mod_pass(rows, width, kPrimes[attempt], true);
            ModPass b = mod_pass(rows, width, kPrimes[attempt + 1], false);
            // rows independent mod p are independent over Q, so the exact
            // RREF of the selection has rank == |selected| automatically;
            // the certification is the prime-vs-prime (and hence prime-vs-Q)
            // agreement on the full row set.
            if (a.rank == b.rank) {
                stats.prime_agreements.fetch_add(1, std::memory_order_relaxed);
                RrefQ r = back_substitute(exact_echelon(rows, &a.selected), width);
                if (r.rank() != a.rank) throw std::logic_error("selected rows collapsed");
                return r;
            }
            stats.retries.fetch_add(1, std::memory_order_relaxed);
        } catch (const std::overflow_error&) {
            stats.retries.fetch_add(1, std::memory_order_relaxed);
        }
    }
    // persistent disagreement: compute exactly from scratch
    stats.fallbacks.fetch_add(1, std::memory_order_relaxed);
    return back_substitute(exact_echelon(rows, nullptr), width);
}

int certified_rank(const std::vector<RowQ>& rows, int width) {
    auto& stats = rank_stats();
    stats.computations.fetch_add(1, std::memory_order_relaxed);
    if (rows.empty() || width == 0) return 0;
    for (int attempt = 0; attempt + 1 < kPrimeCount; ++attempt) {
        try {
            ModPass a = mod_pass(rows, width, kPrimes[attempt], true);
            ModPass b = mod_pass(rows, width, kPrimes[attempt + 1], false);
            if (a.rank != b.rank) {
                stats.retries.fetch_add(1, std::memory_order_relaxed);
                continue;
            }
            stats.prime_agreements.fetch_add(1, std::memory_order_relaxed);
            if (a.rank == width || a.rank == static_cast<int>(rows.size()))
                return a.rank;  // pinched between the mod-p bound and the trivial one
            auto ech = exact_echelon(rows, &a.selected);
            if (static_cast<int>(ech.size()) != a.rank)
                throw std::logic_error("selected rows collapsed");
            return a.rank;
        } catch (const std::overflow_error&) {
            stats.retries.fetch_add(1, std::memory_order_relaxed);
        }
    }
    stats.fallbacks.fetch_add(1, std::memory_order_relaxed);
    return static_cast<int>(exact_echelon(rows, nullptr).size());
}

}  // namespace qladder
