#pragma once

#include <string>
#include <vector>

#include "segcover/rational.hpp"

namespace segcover {

// Minimization LP in inequality form:
//   min c.x   s.t.   A x >= b,   0 <= x <= 1.
// Labels are optional (empty, or one per variable / row).
struct LinearProgram {
    std::vector<Rational> objective;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    std::vector<std::string> var_labels;
    std::vector<std::string> row_labels;

    std::size_t num_vars() const { return objective.size(); }
    std::size_t num_rows() const { return rows.size(); }
};

enum class LpStatus { Optimal, Infeasible };

struct LinearSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> x;  // one value per variable when optimal
    Rational objective;
};

// Two-phase bounded-variable simplex with exact rational pivoting and
// Bland's anti-cycling rule; the returned basic solution is deterministic.
// Throws StructuralError on dimension mismatches.
LinearSolution solve_lp(const LinearProgram& lp);

// Fixed-field-order text dump for external cross-checking.
std::string dump_lp(const LinearProgram& lp);

}  // namespace segcover
