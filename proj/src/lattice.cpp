#include "qladder/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qladder {

namespace {

std::vector<std::pair<int, int>> canonical_edges(
    int n_vertices, std::vector<std::pair<int, int>> edges) {
    for (auto& e : edges) {
        if (e.first == e.second) throw std::invalid_argument("lattice: self-loop");
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first < 0 || e.second >= n_vertices)
            throw std::invalid_argument("lattice: edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

// Centered column range used by the two-row builders: n columns, 0-centered.
std::pair<int, int> centered_columns(int n) {
    int lo = -(n / 2);
    return {lo, lo + n - 1};
}

}  // namespace

int LatticeModel::vertex_index(int column, int row) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(),
                               std::make_pair(column, row));
    if (it == vertices.end() || *it != std::make_pair(column, row)) return -1;
    return static_cast<int>(it - vertices.begin());
}

std::vector<int> LatticeModel::columns() const {
    std::vector<int> cols;
    for (const auto& v : vertices)
        if (cols.empty() || cols.back() != v.first) cols.push_back(v.first);
    return cols;
}

LatticeModel LatticeModel::custom(std::string name,
                                  std::vector<std::pair<int, int>> vertices,
                                  std::vector<std::pair<int, int>> edges) {
    LatticeModel m;
    m.name = std::move(name);
    std::vector<std::pair<int, int>> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("lattice: duplicate vertex");
    if (sorted != vertices)
        throw std::invalid_argument("lattice: vertices must be sorted by (column,row)");
    m.vertices = std::move(sorted);
    m.edges = canonical_edges(m.vertex_count(), std::move(edges));
    return m;
}

LatticeModel LatticeModel::twisted_square(int n) {
    if (n < 1) throw std::invalid_argument("twisted_square: n >= 1");
    auto [lo, hi] = centered_columns(n);
    std::vector<std::pair<int, int>> vs, es;
    for (int c = lo; c <= hi; ++c)
        for (int r = 0; r < 2; ++r) vs.push_back({c, r});
    LatticeModel m;
    m.name = "twisted_square(" + std::to_string(n) + ")";
    m.vertices = vs;
    std::vector<std::pair<int, int>> edges;
    for (int c = lo; c <= hi; ++c)
        for (int d = -1; d <= 1; ++d) {
            int x = m.vertex_index(c, 0), y = m.vertex_index(c + d, 1);
            if (x >= 0 && y >= 0) edges.push_back({x, y});
        }
    m.edges = canonical_edges(m.vertex_count(), std::move(edges));
    return m;
}

LatticeModel LatticeModel::square(int n) {
    if (n < 1) throw std::invalid_argument("square: n >= 1");
    auto [lo, hi] = centered_columns(n);
    std::vector<std::pair<int, int>> vs;
    for (int c = lo; c <= hi; ++c)
        for (int r = 0; r < 2; ++r) vs.push_back({c, r});
    LatticeModel m;
    m.name = "square(" + std::to_string(n) + ")";
    m.vertices = vs;
    std::vector<std::pair<int, int>> edges;
    for (int c = lo; c <= hi; ++c) {
        edges.push_back({m.vertex_index(c, 0), m.vertex_index(c, 1)});
        for (int r = 0; r < 2; ++r)
            if (c < hi) edges.push_back({m.vertex_index(c, r), m.vertex_index(c + 1, r)});
    }
    m.edges = canonical_edges(m.vertex_count(), std::move(edges));
    return m;
}

LatticeModel LatticeModel::cyclic_tri3(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_tri3: n >= 1");
    std::vector<std::pair<int, int>> vs;
    for (int c = 1; c <= n; ++c)
        for (int r = 0; r < 3; ++r) vs.push_back({c, r});
    LatticeModel m;
    m.name = "cyclic_tri3(" + std::to_string(n) + ")";
    m.vertices = vs;
    std::vector<std::pair<int, int>> edges;
    for (int c = 1; c <= n; ++c) {
        for (int r = 0; r < 3; ++r)
            edges.push_back({m.vertex_index(c, r), m.vertex_index(c, (r + 1) % 3)});
        if (c < n)
            for (int r = 0; r < 3; ++r) {
                edges.push_back({m.vertex_index(c, r), m.vertex_index(c + 1, r)});
                edges.push_back({m.vertex_index(c, r), m.vertex_index(c + 1, (r + 1) % 3)});
            }
    }
    m.edges = canonical_edges(m.vertex_count(), std::move(edges));
    return m;
}

LatticeModel LatticeModel::mleg(int mrows, int n) {
    if (mrows < 1 || n < 1) throw std::invalid_argument("mleg: m, n >= 1");
    std::vector<std::pair<int, int>> vs;
    for (int c = 1; c <= n; ++c)
        for (int r = 1; r <= mrows; ++r) vs.push_back({c, r});
    LatticeModel m;
    m.name = "mleg(" + std::to_string(mrows) + "," + std::to_string(n) + ")";
    m.vertices = vs;
    std::vector<std::pair<int, int>> edges;
    for (int c = 1; c <= n; ++c)
        for (int r = 1; r <= mrows; ++r) {
            if (r < mrows) edges.push_back({m.vertex_index(c, r), m.vertex_index(c, r + 1)});
            if (c < n)
                for (int dr : {-1, 1}) {
                    int j = m.vertex_index(c + 1, r + dr);
                    if (j >= 0) edges.push_back({m.vertex_index(c, r), j});
                }
        }
    m.edges = canonical_edges(m.vertex_count(), std::move(edges));
    return m;
}

LatticeModel LatticeModel::disjoint_union(const LatticeModel& a, const LatticeModel& b) {
    auto cols_a = a.columns();
    auto cols_b = b.columns();
    int shift = 0;
    if (!cols_a.empty() && !cols_b.empty())
        shift = cols_a.back() - cols_b.front() + 2;  // leave a gap column
    std::vector<std::pair<int, int>> vs = a.vertices;
    for (const auto& v : b.vertices) vs.push_back({v.first + shift, v.second});
    // vertex order may interleave after the shift; rebuild edges by coordinates
    LatticeModel m;
    m.name = a.name + " + " + b.name;
    std::sort(vs.begin(), vs.end());
    m.vertices = vs;
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : a.edges)
        edges.push_back({m.vertex_index(a.vertices[e.first].first, a.vertices[e.first].second),
                         m.vertex_index(a.vertices[e.second].first, a.vertices[e.second].second)});
    for (const auto& e : b.edges)
        edges.push_back(
            {m.vertex_index(b.vertices[e.first].first + shift, b.vertices[e.first].second),
             m.vertex_index(b.vertices[e.second].first + shift, b.vertices[e.second].second)});
    m.edges = canonical_edges(m.vertex_count(), std::move(edges));
    return m;
}

WeightSystem weight_system_f(const LatticeModel& m) {
    auto cols = m.columns();
    int n = static_cast<int>(cols.size());
    std::vector<long long> per_col(n);
    for (int i = 0; i < n; ++i) per_col[i] = i - n / 2;  // (i+1) - 1 - floor(n/2)
    return weight_system_columns(m, per_col);
}

WeightSystem weight_system_zero(const LatticeModel& m) {
    return {std::vector<long long>(m.vertex_count(), 0)};
}

WeightSystem weight_system_columns(const LatticeModel& m,
                                   const std::vector<long long>& per_column) {
    auto cols = m.columns();
    if (per_column.size() != cols.size())
        throw std::invalid_argument("weight_system_columns: one weight per column");
    WeightSystem ws;
    ws.w.resize(m.vertex_count());
    for (int i = 0; i < m.vertex_count(); ++i) {
        auto it = std::lower_bound(cols.begin(), cols.end(), m.vertices[i].first);
        ws.w[i] = per_column[it - cols.begin()];
    }
    return ws;
}

std::vector<mpz_class> WeightTable::particle_counts() const {
    std::vector<mpz_class> out(max_particles + 1, 0);
    for (const auto& [k, c] : cells) out[k.second] += c;
    return out;
}

LaurentQT WeightTable::graded_euler() const {
    LaurentQT r(Window::exact());
    for (const auto& [k, c] : cells)
        r.add_term(static_cast<int>(k.first), 0, (k.second % 2 == 0) ? c : -c);
    return r;
}

mpz_class WeightTable::euler() const {
    mpz_class e = 0;
    for (const auto& [k, c] : cells) e += (k.second % 2 == 0) ? c : -c;
    return e;
}

LaurentQT WeightTable::g_poly(int particles) const {
    LaurentQT r(Window::exact());
    for (const auto& [k, c] : cells)
        if (k.second == particles) r.add_term(static_cast<int>(k.first), 0, c);
    return r;
}

WeightTable enumerate_exhaustive(const LatticeModel& m, const WeightSystem& ws) {
    int n = m.vertex_count();
    if (n > 24) throw std::invalid_argument("enumerate_exhaustive: too many vertices");
    if (static_cast<int>(ws.w.size()) != n)
        throw std::invalid_argument("enumerate_exhaustive: weight size mismatch");
    std::vector<uint32_t> adj(n, 0);
    for (const auto& e : m.edges) {
        adj[e.first] |= 1u << e.second;
        adj[e.second] |= 1u << e.first;
    }
    WeightTable t;
    // depth-first over vertices; prefix = chosen independent set so far
    struct Frame {
        int i;
        uint32_t blocked;
        int cnt;
        long long wsum;
    };
    std::vector<Frame> stack{{0, 0, 0, 0}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.i == n) {
            t.cells[{f.wsum, f.cnt}] += 1;
            t.max_particles = std::max(t.max_particles, f.cnt);
            continue;
        }
        stack.push_back({f.i + 1, f.blocked, f.cnt, f.wsum});
        if (!(f.blocked & (1u << f.i)))
            stack.push_back(
                {f.i + 1, f.blocked | adj[f.i], f.cnt + 1, f.wsum + ws.w[f.i]});
    }
    return t;
}

WeightTable enumerate_transfer(const LatticeModel& m, const WeightSystem& ws) {
    if (static_cast<int>(ws.w.size()) != m.vertex_count())
        throw std::invalid_argument("enumerate_transfer: weight size mismatch");
    auto cols = m.columns();
    int ncols = static_cast<int>(cols.size());
    // vertices per column (indices into m.vertices)
    std::vector<std::vector<int>> verts(ncols);
    for (int i = 0; i < m.vertex_count(); ++i) {
        auto it = std::lower_bound(cols.begin(), cols.end(), m.vertices[i].first);
        verts[it - cols.begin()].push_back(i);
    }
    // edge masks: within-column adjacency and previous-column constraints
    std::vector<std::vector<uint32_t>> in_col(ncols), from_prev(ncols);
    for (int c = 0; c < ncols; ++c) {
        in_col[c].assign(verts[c].size(), 0);
        from_prev[c].assign(c > 0 ? verts[c - 1].size() : 0, 0);
    }
    auto locate = [&](int v) {
        auto it = std::lower_bound(cols.begin(), cols.end(), m.vertices[v].first);
        int c = static_cast<int>(it - cols.begin());
        int pos = static_cast<int>(std::find(verts[c].begin(), verts[c].end(), v) -
                                   verts[c].begin());
        return std::make_pair(c, pos);
    };
    for (const auto& e : m.edges) {
        auto [ca, pa] = locate(e.first);
        auto [cb, pb] = locate(e.second);
        if (ca == cb) {
            in_col[ca][pa] |= 1u << pb;
            in_col[ca][pb] |= 1u << pa;
        } else if (cb == ca + 1) {
            from_prev[cb][pa] |= 1u << pb;
        } else if (ca == cb + 1) {
            from_prev[ca][pb] |= 1u << pa;
        } else {
            throw std::invalid_argument(
                "enumerate_transfer: edge spans non-adjacent columns");
        }
    }
    // independent subsets per column
    std::vector<std::vector<uint32_t>> states(ncols);
    for (int c = 0; c < ncols; ++c) {
        int k = static_cast<int>(verts[c].size());
        if (k > 20) throw std::invalid_argument("enumerate_transfer: column too tall");
        for (uint32_t s = 0; s < (1u << k); ++s) {
            bool ok = true;
            for (int b = 0; b < k && ok; ++b)
                if ((s >> b) & 1u) ok = !(s & in_col[c][b] & ((1u << b) - 1));
            if (ok) states[c].push_back(s);
        }
    }
    using Cells = std::map<std::pair<long long, int>, mpz_class>;
    auto state_delta = [&](int c, uint32_t s) {
        long long wsum = 0;
        int cnt = 0;
        for (int b = 0; b < static_cast<int>(verts[c].size()); ++b)
            if ((s >> b) & 1u) {
                wsum += ws.w[verts[c][b]];
                ++cnt;
            }
        return std::make_pair(wsum, cnt);
    };
    std::vector<Cells> dp(states[0].size());
    for (size_t si = 0; si < states[0].size(); ++si) {
        auto [wsum, cnt] = state_delta(0, states[0][si]);
        dp[si][{wsum, cnt}] = 1;
    }
    for (int c = 1; c < ncols; ++c) {
        std::vector<Cells> ndp(states[c].size());
        for (size_t sj = 0; sj < states[c].size(); ++sj) {
            uint32_t s = states[c][sj];
            auto [dw, dc] = state_delta(c, s);
            for (size_t si = 0; si < states[c - 1].size(); ++si) {
                uint32_t p = states[c - 1][si];
                bool compat = true;
                for (int pa = 0; pa < static_cast<int>(verts[c - 1].size()) && compat;
                     ++pa)
                    if ((p >> pa) & 1u)
                        if (from_prev[c][pa] & s) compat = false;
                if (!compat) continue;
                for (const auto& [k, v] : dp[si]) ndp[sj][{k.first + dw, k.second + dc}] += v;
            }
        }
        dp.swap(ndp);
    }
    WeightTable t;
    for (const auto& cells : dp)
        for (const auto& [k, v] : cells) {
            t.cells[k] += v;
            t.max_particles = std::max(t.max_particles, k.second);
        }
    return t;
}

WeightTable weight_table(const LatticeModel& m, const WeightSystem& ws) {
    return m.vertex_count() <= 24 ? enumerate_exhaustive(m, ws)
                                  : enumerate_transfer(m, ws);
}

std::vector<mpz_class> independence_counts(const LatticeModel& m) {
    return weight_table(m, weight_system_zero(m)).particle_counts();
}

mpz_class euler_char(const LatticeModel& m) {
    return weight_table(m, weight_system_zero(m)).euler();
}

LaurentQT graded_euler(const LatticeModel& m, const WeightSystem& ws) {
    return weight_table(m, ws).graded_euler();
}

}  // namespace qladder
