#include "plk/lp.hpp"

#include <limits>

namespace plk::lp {

namespace {

constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

// Dense tableau: rows 0..m-1 constraints, last column rhs. The objective row
// holds reduced costs of the maximization (entering when positive).
struct Tableau {
    std::vector<std::vector<Rational>> t;
    std::vector<std::size_t> basis;
    std::size_t cols = 0;

    void pivot(std::size_t r, std::size_t c, std::vector<Rational>& obj, Rational& obj_value) {
        Rational inv = 1 / t[r][c];
        for (auto& v : t[r]) v *= inv;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i == r || t[i][c] == 0) continue;
            Rational f = t[i][c];
            for (std::size_t j = 0; j <= cols; ++j)
                if (t[r][j] != 0) t[i][j] -= f * t[r][j];
        }
        if (obj[c] != 0) {
            Rational f = obj[c];
            for (std::size_t j = 0; j < cols; ++j)
                if (t[r][j] != 0) obj[j] -= f * t[r][j];
            obj_value += f * t[r][cols];
        }
        basis[r] = c;
    }

    // Returns false when unbounded.
    bool run(std::vector<Rational>& obj, Rational& obj_value, const std::vector<bool>& allowed) {
        for (;;) {
            std::size_t enter = none;
            for (std::size_t j = 0; j < cols; ++j)
                if (allowed[j] && obj[j] > 0) {
                    enter = j;
                    break;
                }
            if (enter == none) return true;
            std::size_t leave = none;
            Rational best;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (t[i][enter] <= 0) continue;
                Rational ratio = t[i][cols] / t[i][enter];
                if (leave == none || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == none) return false;
            pivot(leave, enter, obj, obj_value);
        }
    }
};

}  // namespace

Result maximize(const std::vector<Rational>& c, const std::vector<Constraint>& constraints) {
    std::size_t n = c.size(), m = constraints.size();
    std::size_t slack_count = 0;
    for (const auto& k : constraints)
        if (k.sense != Sense::eq) ++slack_count;
    std::size_t art_start = n + slack_count;
    std::size_t cols = art_start + m;

    Tableau tab;
    tab.cols = cols;
    tab.t.assign(m, std::vector<Rational>(cols + 1, Rational(0)));
    tab.basis.assign(m, none);
    std::size_t slack = n;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& k = constraints[i];
        Rational sign = k.rhs < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = sign * k.coeffs[j];
        if (k.sense != Sense::eq) {
            Rational s = k.sense == Sense::le ? 1 : -1;
            tab.t[i][slack++] = sign * s;
        }
        tab.t[i][cols] = sign * k.rhs;
        tab.t[i][art_start + i] = 1;
        tab.basis[i] = art_start + i;
    }

    // Phase 1: maximize -sum(artificials).
    std::vector<Rational> obj(cols, Rational(0));
    Rational obj_value = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < art_start; ++j) obj[j] += tab.t[i][j];
        obj_value -= tab.t[i][cols];
    }
    std::vector<bool> allowed(cols, true);
    tab.run(obj, obj_value, allowed);
    Result res;
    if (obj_value != 0) return res;

    // Drive remaining artificials out of the basis where possible.
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.basis[i] < art_start) continue;
        for (std::size_t j = 0; j < art_start; ++j)
            if (tab.t[i][j] != 0) {
                tab.pivot(i, j, obj, obj_value);
                break;
            }
    }
    for (std::size_t j = art_start; j < cols; ++j) allowed[j] = false;

    // Phase 2.
    std::vector<Rational> obj2(cols, Rational(0));
    Rational value = 0;
    for (std::size_t j = 0; j < n; ++j) obj2[j] = c[j];
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t b = tab.basis[i];
        if (b >= cols || obj2[b] == 0) continue;
        Rational f = obj2[b];
        for (std::size_t j = 0; j < cols; ++j) obj2[j] -= f * tab.t[i][j];
        value += f * tab.t[i][cols];
    }
    if (!tab.run(obj2, value, allowed)) {
        res.status = Status::unbounded;
        return res;
    }
    res.status = Status::optimal;
    res.value = value;
    res.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.t[i][cols];
    return res;
}

}  // namespace plk::lp
