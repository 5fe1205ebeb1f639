#include "plk/homology.hpp"

#include "plk/errors.hpp"
#include "plk/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>

namespace plk {

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<SparseMatrix> boundaries)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
    boundaries_.resize(ranks_.size());
    for (std::size_t k = 1; k < ranks_.size(); ++k) {
        const auto& b = boundaries_[k];
        if (b.cols != ranks_[k] || b.rows != ranks_[k - 1] || b.columns.size() != b.cols)
            throw StructuralError("boundary matrix " + std::to_string(k) + " has wrong shape");
    }
}

std::size_t ChainComplex::first_nonzero_square() const {
    for (std::size_t k = 2; k < ranks_.size(); ++k) {
        const auto& outer = boundaries_[k - 1];
        for (const auto& col : boundaries_[k].columns) {
            std::vector<long long> acc(outer.rows, 0);
            for (auto [r, v] : col)
                for (auto [r2, w] : outer.columns[r]) acc[r2] += v * w;
            if (std::any_of(acc.begin(), acc.end(), [](long long x) { return x != 0; })) return k;
        }
    }
    return 0;
}

long ChainComplex::euler_characteristic() const {
    long chi = 0;
    for (std::size_t k = 0; k < ranks_.size(); ++k)
        chi += (k % 2 ? -1L : 1L) * static_cast<long>(ranks_[k]);
    return chi;
}

ChainComplex chains_of(const DeltaSet& x) {
    auto rep = check_identities(x);
    if (!rep.ok) throw ValidityError("cannot form chains: " + rep.message);
    std::size_t top = x.table().size();
    std::vector<std::size_t> ranks(top);
    std::vector<SparseMatrix> bd(top);
    for (std::size_t k = 0; k < top; ++k) ranks[k] = x.count(k);
    for (std::size_t k = 1; k < top; ++k) {
        auto& m = bd[k];
        m.rows = ranks[k - 1];
        m.cols = ranks[k];
        m.columns.resize(m.cols);
        for (std::size_t g = 0; g < m.cols; ++g) {
            std::vector<std::pair<std::size_t, long long>> col;
            for (std::size_t i = 0; i <= k; ++i)
                col.emplace_back(x.face(k, g, i), i % 2 ? -1 : 1);
            std::sort(col.begin(), col.end());
            std::vector<std::pair<std::size_t, long long>> merged;
            for (auto [r, v] : col) {
                if (!merged.empty() && merged.back().first == r)
                    merged.back().second += v;
                else
                    merged.emplace_back(r, v);
            }
            std::erase_if(merged, [](const auto& e) { return e.second == 0; });
            m.columns[g] = std::move(merged);
        }
    }
    ChainComplex c(std::move(ranks), std::move(bd));
    if (auto k = c.first_nonzero_square())
        throw ValidityError("boundary squared nonzero in degree " + std::to_string(k));
    return c;
}

IntMatrix dense(const SparseMatrix& m) {
    IntMatrix d(m.rows, std::vector<Integer>(m.cols, Integer(0)));
    for (std::size_t c = 0; c < m.cols; ++c)
        for (auto [r, v] : m.columns[c]) d[r][c] = v;
    return d;
}

namespace {

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

struct DenseSmith {
    IntMatrix a, u, v;
    bool track;

    void swap_rows(std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        if (track) std::swap(u[i], u[j]);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (auto& row : a) std::swap(row[i], row[j]);
        if (track)
            for (auto& row : v) std::swap(row[i], row[j]);
    }
    // row_i += q * row_t
    void add_row(std::size_t i, std::size_t t, const Integer& q) {
        for (std::size_t c = 0; c < a[i].size(); ++c)
            if (a[t][c] != 0) a[i][c] += q * a[t][c];
        if (track)
            for (std::size_t c = 0; c < u[i].size(); ++c)
                if (u[t][c] != 0) u[i][c] += q * u[t][c];
    }
    // col_j += q * col_t
    void add_col(std::size_t j, std::size_t t, const Integer& q) {
        for (auto& row : a)
            if (row[t] != 0) row[j] += q * row[t];
        if (track)
            for (auto& row : v)
                if (row[t] != 0) row[j] += q * row[t];
    }

    std::vector<Integer> run() {
        std::size_t m = a.size(), n = m ? a[0].size() : 0;
        std::vector<Integer> factors;
        for (std::size_t t = 0; t < std::min(m, n); ++t) {
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (a[i][j] != 0 && (pi == m || abs(a[i][j]) < abs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == m) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            for (;;) {
                bool clean = true;
                for (std::size_t i = t + 1; i < m; ++i) {
                    if (a[i][t] == 0) continue;
                    add_row(i, t, Integer(-(a[i][t] / a[t][t])));
                    if (a[i][t] != 0) {
                        swap_rows(i, t);
                        clean = false;
                    }
                }
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (a[t][j] == 0) continue;
                    add_col(j, t, Integer(-(a[t][j] / a[t][t])));
                    if (a[t][j] != 0) {
                        swap_cols(j, t);
                        clean = false;
                    }
                }
                if (!clean) continue;
                for (std::size_t i = t + 1; i < m && clean; ++i)
                    for (std::size_t j = t + 1; j < n; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            add_row(t, i, Integer(1));
                            clean = false;
                            break;
                        }
                if (clean) break;
            }
            if (a[t][t] < 0) {
                for (auto& x : a[t]) x = -x;
                if (track)
                    for (auto& x : u[t]) x = -x;
            }
            factors.push_back(a[t][t]);
        }
        return factors;
    }
};

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
    std::size_t n = x.size(), k = y.size(), m = k ? y[0].size() : 0;
    IntMatrix r(n, std::vector<Integer>(m, Integer(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (x[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (y[l][j] != 0) r[i][j] += x[i][l] * y[l][j];
        }
    return r;
}

Rational int_det(const IntMatrix& m) {
    Matrix q(m.size(), std::vector<Rational>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) q[i][j] = Rational(m[i][j]);
    return determinant(std::move(q));
}

std::vector<Integer> dense_factors(IntMatrix a) {
    DenseSmith s{std::move(a), {}, {}, false};
    return s.run();
}

struct Overflow {};

struct CheckedInt {
    static long long mul(long long a, long long b) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static long long sub(long long a, long long b) {
        long long r;
        if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
};

long long mul(long long a, long long b) { return CheckedInt::mul(a, b); }
long long sub(long long a, long long b) { return CheckedInt::sub(a, b); }
Integer mul(const Integer& a, const Integer& b) { return a * b; }
Integer sub(const Integer& a, const Integer& b) { return a - b; }
bool is_unit(long long v) { return v == 1 || v == -1; }
bool is_unit(const Integer& v) { return v == 1 || v == -1; }

template <class T>
struct Eliminator {
    std::vector<std::vector<std::pair<std::uint32_t, T>>> rows;
    std::vector<std::vector<std::uint32_t>> col_rows;
    std::vector<char> row_alive, col_alive;
    std::size_t rank = 0;

    explicit Eliminator(const SparseMatrix& m)
        : rows(m.rows), col_rows(m.cols), row_alive(m.rows, 1), col_alive(m.cols, 1) {
        for (std::size_t c = 0; c < m.cols; ++c)
            for (auto [r, v] : m.columns[c]) {
                rows[r].emplace_back(static_cast<std::uint32_t>(c), T(v));
                col_rows[c].push_back(static_cast<std::uint32_t>(r));
            }
    }

    const T* entry(std::uint32_t r, std::uint32_t c) const {
        const auto& row = rows[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, std::uint32_t x) { return e.first < x; });
        if (it == row.end() || it->first != c) return nullptr;
        return &it->second;
    }

    void compact(std::uint32_t c) {
        auto& cr = col_rows[c];
        std::sort(cr.begin(), cr.end());
        cr.erase(std::unique(cr.begin(), cr.end()), cr.end());
        std::erase_if(cr, [&](std::uint32_t r) { return !row_alive[r] || !entry(r, c); });
    }

    void eliminate(std::uint32_t p, std::uint32_t c) {
        T u = *entry(p, c);
        const auto pivot_row = rows[p];
        for (auto r : col_rows[c]) {
            if (r == p) continue;
            T f = mul(*entry(r, c), u);
            std::vector<std::pair<std::uint32_t, T>> merged;
            const auto& row = rows[r];
            merged.reserve(row.size() + pivot_row.size());
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < pivot_row.size()) {
                if (j == pivot_row.size() || (i < row.size() && row[i].first < pivot_row[j].first)) {
                    merged.push_back(row[i++]);
                } else if (i == row.size() || pivot_row[j].first < row[i].first) {
                    merged.emplace_back(pivot_row[j].first, sub(T(0), mul(f, pivot_row[j].second)));
                    col_rows[pivot_row[j].first].push_back(r);
                    ++j;
                } else {
                    T v = sub(row[i].second, mul(f, pivot_row[j].second));
                    if (v != 0) merged.emplace_back(row[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            rows[r] = std::move(merged);
        }
        row_alive[p] = 0;
        col_alive[c] = 0;
        ++rank;
    }

    void run() {
        std::size_t ncols = col_rows.size();
        for (bool progress = true; progress;) {
            progress = false;
            std::vector<std::uint32_t> order;
            for (std::uint32_t c = 0; c < ncols; ++c)
                if (col_alive[c]) order.push_back(c);
            std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
                return col_rows[a].size() < col_rows[b].size();
            });
            for (auto c : order) {
                if (!col_alive[c]) continue;
                compact(c);
                if (col_rows[c].empty()) {
                    col_alive[c] = 0;
                    continue;
                }
                std::uint32_t best = UINT32_MAX;
                for (auto r : col_rows[c])
                    if (is_unit(*entry(r, c)) &&
                        (best == UINT32_MAX || rows[r].size() < rows[best].size()))
                        best = r;
                if (best == UINT32_MAX) continue;
                eliminate(best, c);
                progress = true;
            }
        }
    }

    IntMatrix remainder() const {
        std::vector<std::uint32_t> live_rows, live_cols;
        std::vector<std::size_t> col_pos(col_rows.size(), SIZE_MAX);
        for (std::uint32_t r = 0; r < rows.size(); ++r)
            if (row_alive[r] && !rows[r].empty()) live_rows.push_back(r);
        for (auto r : live_rows)
            for (const auto& e : rows[r]) col_pos[e.first] = 0;
        for (std::uint32_t c = 0; c < col_pos.size(); ++c)
            if (col_pos[c] == 0) {
                col_pos[c] = live_cols.size();
                live_cols.push_back(c);
            }
        IntMatrix d(live_rows.size(), std::vector<Integer>(live_cols.size(), Integer(0)));
        for (std::size_t i = 0; i < live_rows.size(); ++i)
            for (const auto& [c, v] : rows[live_rows[i]]) d[i][col_pos[c]] = Integer(v);
        return d;
    }
};

template <class T>
RankTorsion eliminate_sparse(const SparseMatrix& m) {
    Eliminator<T> e(m);
    e.run();
    RankTorsion rt;
    auto factors = dense_factors(e.remainder());
    rt.rank = e.rank + factors.size();
    for (auto& f : factors)
        if (f > 1) rt.torsion.push_back(f);
    return rt;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    DenseSmith s{m, identity_matrix(rows), identity_matrix(cols), true};
    SmithForm out;
    out.factors = s.run();
    out.u = std::move(s.u);
    out.v = std::move(s.v);
    out.d = std::move(s.a);
    return out;
}

bool verify_smith(const IntMatrix& m, const SmithForm& s) {
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    if (s.u.size() != rows || s.v.size() != cols) return false;
    if (rows == 0 || cols == 0) return s.factors.empty();
    if (multiply(multiply(s.u, m), s.v) != s.d) return false;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Integer want = (i == j && i < s.factors.size()) ? s.factors[i] : Integer(0);
            if (s.d[i][j] != want) return false;
        }
    for (std::size_t i = 0; i < s.factors.size(); ++i) {
        if (s.factors[i] <= 0) return false;
        if (i > 0 && s.factors[i] % s.factors[i - 1] != 0) return false;
    }
    return abs(int_det(s.u)) == 1 && abs(int_det(s.v)) == 1;
}

RankTorsion rank_and_torsion(const SparseMatrix& m, std::size_t dense_threshold) {
    if (m.rows <= dense_threshold && m.cols <= dense_threshold) {
        auto d = dense(m);
        auto s = smith_normal_form(d);
        if (!verify_smith(d, s)) throw std::logic_error("Smith certificate failed verification");
        RankTorsion rt;
        rt.rank = s.factors.size();
        for (auto& f : s.factors)
            if (f > 1) rt.torsion.push_back(f);
        return rt;
    }
    try {
        return eliminate_sparse<long long>(m);
    } catch (const Overflow&) {
        return eliminate_sparse<Integer>(m);
    }
}

std::string HomologyProfile::line(std::size_t k) const {
    const auto& h = degrees.at(k);
    std::vector<std::string> parts;
    if (h.betti == 1) parts.push_back("Z");
    if (h.betti > 1) parts.push_back("Z^" + std::to_string(h.betti));
    for (const auto& t : h.torsion) parts.push_back("Z/" + t.str());
    std::string s = "H_" + std::to_string(k) + " = ";
    if (parts.empty()) return s + "0";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " ⊕ " : "") + parts[i];
    return s;
}

std::vector<std::string> HomologyProfile::lines() const {
    std::vector<std::string> r;
    for (std::size_t k = 0; k < degrees.size(); ++k) r.push_back(line(k));
    return r;
}

long HomologyProfile::euler_characteristic() const {
    long chi = 0;
    for (std::size_t k = 0; k < degrees.size(); ++k)
        chi += (k % 2 ? -1L : 1L) * static_cast<long>(degrees[k].betti);
    return chi;
}

bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
    std::size_t n = std::max(a.degrees.size(), b.degrees.size());
    DegreeHomology trivial;
    for (std::size_t k = 0; k < n; ++k) {
        const auto& x = k < a.degrees.size() ? a.degrees[k] : trivial;
        const auto& y = k < b.degrees.size() ? b.degrees[k] : trivial;
        if (!(x == y)) return false;
    }
    return true;
}

HomologyProfile homology(const ChainComplex& c) {
    std::size_t top = c.top();
    std::vector<RankTorsion> rt(top + 1);
    for (std::size_t k = 1; k < top; ++k) rt[k] = rank_and_torsion(c.boundary(k));
    HomologyProfile h;
    h.degrees.resize(top);
    for (std::size_t k = 0; k < top; ++k) {
        std::size_t out = rt[k].rank, in = k + 1 < top ? rt[k + 1].rank : 0;
        h.degrees[k].betti = c.ranks()[k] - out - in;
        if (k + 1 < top) h.degrees[k].torsion = rt[k + 1].torsion;
    }
    return h;
}

HomologyProfile homology(const DeltaSet& x) { return homology(chains_of(x)); }

HomologyProfile betti_profile(const std::vector<std::size_t>& betti) {
    HomologyProfile h;
    for (auto b : betti) h.degrees.push_back({b, {}});
    return h;
}

}  // namespace plk
