#pragma once

#include <cstddef>
#include <vector>

#include "fthresh/arith.hpp"

namespace fthresh {

enum class Sense { LessEq, GreaterEq, Equal };
enum class LpStatus { Optimal, Infeasible, Unbounded };

// Variables are implicitly >= 0.
struct LinearProgram {
    struct Row {
        std::vector<Rational> coeffs;
        Sense sense;
        Rational rhs;
    };

    explicit LinearProgram(std::size_t vars, bool maximize = true)
        : num_vars(vars), objective(vars), maximize(maximize) {}

    void add_row(std::vector<Rational> coeffs, Sense sense, Rational rhs);

    std::size_t num_vars;
    std::vector<Rational> objective;
    bool maximize;
    std::vector<Row> rows;
};

// Dual sign convention. For a max problem: y >= 0 on <= rows, y <= 0 on >= rows, free on = rows,
// with A^T y >= c and b.y equal to the optimum. For a min problem every sign and inequality flips.
struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    std::vector<Rational> primal;
    std::vector<Rational> dual;
};

// Two-phase dense simplex over exact rationals, Bland's rule.
LpSolution lp_solve(const LinearProgram& lp);

// Checks the certificate: primal feasibility, dual feasibility, equal objective values.
bool lp_certificate_valid(const LinearProgram& lp, const LpSolution& sol);

}  // namespace fthresh
