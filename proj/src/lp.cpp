#include "fthresh/lp.hpp"

#include <optional>

#include "fthresh/errors.hpp"

namespace fthresh {

void LinearProgram::add_row(std::vector<Rational> coeffs, Sense sense, Rational rhs) {
    if (coeffs.size() != num_vars) throw DomainError("constraint width does not match variable count");
    rows.push_back({std::move(coeffs), sense, std::move(rhs)});
}

namespace {

struct Tableau {
    std::size_t m = 0, cols = 0;
    std::vector<std::vector<Rational>> a;  // m rows, cols + 1 entries (last = rhs)
    std::vector<std::size_t> basis;
    std::vector<Rational> cost;  // per column
    std::vector<bool> banned;    // columns not allowed to enter

    void pivot(std::size_t r, std::size_t c) {
        Rational inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j <= cols; ++j)
                if (a[r][j] != 0) a[i][j] -= f * a[r][j];
        }
        basis[r] = c;
    }

    Rational reduced_cost(std::size_t j) const {
        Rational d = cost[j];
        for (std::size_t i = 0; i < m; ++i)
            if (a[i][j] != 0) d -= cost[basis[i]] * a[i][j];
        return d;
    }

    // Minimizes cost. Returns false when unbounded.
    bool run() {
        while (true) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < cols; ++j) {
                if (banned[j]) continue;
                if (reduced_cost(j) < 0) {
                    enter = j;
                    break;
                }
            }
            if (!enter) return true;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < m; ++i) {
                if (a[i][*enter] <= 0) continue;
                Rational ratio = a[i][cols] / a[i][*enter];
                if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave) return false;
            pivot(*leave, *enter);
        }
    }
};

}  // namespace

LpSolution lp_solve(const LinearProgram& lp) {
    const std::size_t n = lp.num_vars;
    const std::size_t m = lp.rows.size();
    std::vector<int> sign(m, 1);
    std::vector<Sense> sense(m);
    for (std::size_t i = 0; i < m; ++i) {
        sense[i] = lp.rows[i].sense;
        if (lp.rows[i].rhs < 0) {
            sign[i] = -1;
            if (sense[i] == Sense::LessEq) sense[i] = Sense::GreaterEq;
            else if (sense[i] == Sense::GreaterEq) sense[i] = Sense::LessEq;
        }
    }
    // Column layout: originals, one slack/surplus per inequality, one artificial per >=/= row.
    std::vector<std::optional<std::size_t>> slack(m), art(m);
    std::size_t cols = n;
    for (std::size_t i = 0; i < m; ++i)
        if (sense[i] != Sense::Equal) slack[i] = cols++;
    for (std::size_t i = 0; i < m; ++i)
        if (sense[i] != Sense::LessEq) art[i] = cols++;

    Tableau t;
    t.m = m;
    t.cols = cols;
    t.a.assign(m, std::vector<Rational>(cols + 1));
    t.basis.resize(m);
    t.banned.assign(cols, false);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t.a[i][j] = sign[i] * lp.rows[i].coeffs[j];
        t.a[i][cols] = sign[i] * lp.rows[i].rhs;
        if (slack[i]) t.a[i][*slack[i]] = sense[i] == Sense::LessEq ? 1 : -1;
        if (art[i]) {
            t.a[i][*art[i]] = 1;
            t.basis[i] = *art[i];
        } else {
            t.basis[i] = *slack[i];
        }
    }

    LpSolution sol;
    // Phase 1
    t.cost.assign(cols, 0);
    bool any_art = false;
    for (std::size_t i = 0; i < m; ++i)
        if (art[i]) {
            t.cost[*art[i]] = 1;
            any_art = true;
        }
    std::vector<bool> removed(m, false);
    if (any_art) {
        t.run();
        Rational infeas = 0;
        for (std::size_t i = 0; i < m; ++i) infeas += t.cost[t.basis[i]] * t.a[i][cols];
        if (infeas > 0) {
            sol.status = LpStatus::Infeasible;
            return sol;
        }
        std::vector<bool> is_art(cols, false);
        for (std::size_t i = 0; i < m; ++i)
            if (art[i]) is_art[*art[i]] = true;
        for (std::size_t i = 0; i < m; ++i) {
            if (!is_art[t.basis[i]]) continue;
            std::optional<std::size_t> c;
            for (std::size_t j = 0; j < cols; ++j)
                if (!is_art[j] && t.a[i][j] != 0) {
                    c = j;
                    break;
                }
            if (c) t.pivot(i, *c);
            else removed[i] = true;  // redundant equality; artificial stays basic at zero
        }
        for (std::size_t j = 0; j < cols; ++j)
            if (is_art[j]) t.banned[j] = true;
    }
    // Phase 2: minimize c' = -c for max problems.
    t.cost.assign(cols, 0);
    for (std::size_t j = 0; j < n; ++j) t.cost[j] = lp.maximize ? Rational(-lp.objective[j]) : lp.objective[j];
    if (!t.run()) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }
    sol.status = LpStatus::Optimal;
    sol.primal.assign(n, 0);
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] < n) sol.primal[t.basis[i]] = t.a[i][cols];
    sol.value = 0;
    for (std::size_t j = 0; j < n; ++j) sol.value += lp.objective[j] * sol.primal[j];

    // Multipliers from the initial identity columns, then undo the row normalization.
    sol.dual.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (removed[i]) continue;
        std::size_t col = art[i] ? *art[i] : *slack[i];
        // column `col` now holds B^{-1} e_i, so c_B B^{-1} e_i is the multiplier
        Rational y = 0;
        for (std::size_t r = 0; r < m; ++r)
            if (t.a[r][col] != 0) y += t.cost[t.basis[r]] * t.a[r][col];
        Rational out = lp.maximize ? Rational(-y) : y;
        sol.dual[i] = sign[i] * out;
    }
    return sol;
}

bool lp_certificate_valid(const LinearProgram& lp, const LpSolution& sol) {
    if (sol.status != LpStatus::Optimal) return false;
    const std::size_t n = lp.num_vars, m = lp.rows.size();
    for (std::size_t j = 0; j < n; ++j)
        if (sol.primal[j] < 0) return false;
    Rational by = 0;
    for (std::size_t i = 0; i < m; ++i) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < n; ++j) lhs += lp.rows[i].coeffs[j] * sol.primal[j];
        const auto& row = lp.rows[i];
        if (row.sense == Sense::LessEq && lhs > row.rhs) return false;
        if (row.sense == Sense::GreaterEq && lhs < row.rhs) return false;
        if (row.sense == Sense::Equal && lhs != row.rhs) return false;
        // sign of y
        const Rational& y = sol.dual[i];
        int dir = lp.maximize ? 1 : -1;
        if (row.sense == Sense::LessEq && dir * y < 0) return false;
        if (row.sense == Sense::GreaterEq && dir * y > 0) return false;
        by += row.rhs * y;
    }
    for (std::size_t j = 0; j < n; ++j) {
        Rational aty = 0;
        for (std::size_t i = 0; i < m; ++i) aty += lp.rows[i].coeffs[j] * sol.dual[i];
        if (lp.maximize ? aty < lp.objective[j] : aty > lp.objective[j]) return false;
    }
    return by == sol.value;
}

}  // namespace fthresh
