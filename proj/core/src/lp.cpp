#include "segcover/lp.hpp"

#include <limits>
#include <optional>
#include <sstream>

#include "segcover/errors.hpp"

namespace segcover {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Full-tableau bounded-variable simplex. Columns: structural variables in
// [0,1], one surplus per row in [0,inf), artificials appended for phase 1.
// The tableau holds B^{-1} * A_all; `beta` holds basic variable values
// directly, so a nonbasic variable resting at its upper bound only needs the
// `at_upper` flag.
class Simplex {
  public:
    explicit Simplex(const LinearProgram& lp) : n_struct_(lp.num_vars()), m_(lp.num_rows()) {
        const std::size_t n_total = n_struct_ + m_;
        cost_.assign(n_total, Rational(0));
        upper_.assign(n_total, std::nullopt);
        for (std::size_t j = 0; j < n_struct_; ++j) {
            cost_[j] = lp.objective[j];
            upper_[j] = Rational(1);
        }
        at_upper_.assign(n_total, false);
        locked_.assign(n_total, false);
        basic_flag_.assign(n_total, false);

        tableau_.assign(m_, std::vector<Rational>(n_total, Rational(0)));
        beta_.assign(m_, Rational(0));
        basis_.assign(m_, kNone);

        // Initial basis with all structural variables at 0: a row with
        // b <= 0 takes its own surplus (row negated so the basic coefficient
        // is +1); a row with b > 0 takes an artificial.
        std::vector<std::size_t> artificial_rows;
        for (std::size_t r = 0; r < m_; ++r) {
            if (lp.rhs[r] <= 0) {
                for (std::size_t j = 0; j < n_struct_; ++j) tableau_[r][j] = -lp.rows[r][j];
                tableau_[r][n_struct_ + r] = 1;
                set_basis(r, n_struct_ + r);
                beta_[r] = -lp.rhs[r];
            } else {
                for (std::size_t j = 0; j < n_struct_; ++j) tableau_[r][j] = lp.rows[r][j];
                tableau_[r][n_struct_ + r] = -1;
                artificial_rows.push_back(r);
            }
        }
        for (std::size_t r : artificial_rows) {
            const std::size_t col = cost_.size();
            cost_.push_back(Rational(0));
            upper_.push_back(std::nullopt);
            at_upper_.push_back(false);
            locked_.push_back(false);
            basic_flag_.push_back(false);
            artificial_.push_back(col);
            for (std::size_t rr = 0; rr < m_; ++rr)
                tableau_[rr].push_back(Rational(rr == r ? 1 : 0));
            set_basis(r, col);
            beta_[r] = lp.rhs[r];
        }
    }

    bool phase_one() {
        std::vector<Rational> phase_cost(cost_.size(), Rational(0));
        for (std::size_t col : artificial_) phase_cost[col] = 1;
        iterate(phase_cost);
        if (current_value(phase_cost) != 0) return false;

        // Expel artificials stuck in the basis at value 0; a row with no
        // non-artificial pivot column is redundant and keeps its locked
        // artificial.
        for (std::size_t r = 0; r < m_; ++r) {
            if (basis_[r] < n_struct_ + m_) continue;
            for (std::size_t j = 0; j < n_struct_ + m_; ++j) {
                if (basic_flag_[j] || tableau_[r][j] == 0) continue;
                const Rational value = at_upper_[j] ? *upper_[j] : Rational(0);
                at_upper_[j] = false;
                pivot(r, j);
                beta_[r] = value;  // the swap moves no variable
                break;
            }
        }
        for (std::size_t col : artificial_) locked_[col] = true;
        return true;
    }

    void phase_two() { iterate(cost_); }

    LinearSolution extract() const {
        LinearSolution sol;
        sol.status = LpStatus::Optimal;
        sol.x.assign(n_struct_, Rational(0));
        for (std::size_t j = 0; j < n_struct_; ++j)
            if (!basic_flag_[j] && at_upper_[j]) sol.x[j] = *upper_[j];
        for (std::size_t r = 0; r < m_; ++r)
            if (basis_[r] < n_struct_) sol.x[basis_[r]] = beta_[r];
        sol.objective = 0;
        for (std::size_t j = 0; j < n_struct_; ++j) sol.objective += cost_[j] * sol.x[j];
        return sol;
    }

  private:
    void set_basis(std::size_t row, std::size_t col) {
        if (basis_[row] != kNone) basic_flag_[basis_[row]] = false;
        basis_[row] = col;
        basic_flag_[col] = true;
    }

    Rational current_value(const std::vector<Rational>& cost) const {
        Rational value = 0;
        for (std::size_t j = 0; j < cost.size(); ++j)
            if (!basic_flag_[j] && at_upper_[j]) value += cost[j] * *upper_[j];
        for (std::size_t r = 0; r < m_; ++r) value += cost[basis_[r]] * beta_[r];
        return value;
    }

    void iterate(const std::vector<Rational>& cost) {
        for (;;) {
            // Reduced costs from scratch; exact arithmetic keeps basic
            // columns at exactly zero.
            std::vector<Rational> d = cost;
            for (std::size_t r = 0; r < m_; ++r) {
                const Rational& cb = cost[basis_[r]];
                if (cb == 0) continue;
                for (std::size_t j = 0; j < d.size(); ++j)
                    if (tableau_[r][j] != 0) d[j] -= cb * tableau_[r][j];
            }

            // Bland: smallest improving nonbasic index enters.
            std::size_t enter = kNone;
            for (std::size_t j = 0; j < d.size(); ++j) {
                if (locked_[j] || basic_flag_[j]) continue;
                if ((!at_upper_[j] && d[j] < 0) || (at_upper_[j] && d[j] > 0)) {
                    enter = j;
                    break;
                }
            }
            if (enter == kNone) return;

            const Rational dir = at_upper_[enter] ? -1 : 1;

            // Ratio test: smallest step hits either a basic variable's bound
            // or the entering variable's opposite bound.
            bool have_t = false;
            Rational best_t;
            std::size_t leave_row = kNone;  // kNone with have_t => bound flip
            bool leave_to_upper = false;
            if (upper_[enter]) {
                have_t = true;
                best_t = *upper_[enter];
            }
            for (std::size_t r = 0; r < m_; ++r) {
                const Rational rate = dir * tableau_[r][enter];
                Rational limit;
                bool to_upper;
                if (rate > 0) {  // basic value falls toward 0
                    limit = beta_[r] / rate;
                    to_upper = false;
                } else if (rate < 0 && upper_[basis_[r]]) {  // rises toward its upper bound
                    limit = (*upper_[basis_[r]] - beta_[r]) / -rate;
                    to_upper = true;
                } else {
                    continue;
                }
                const bool better =
                    !have_t || limit < best_t ||
                    (limit == best_t && leave_row != kNone && basis_[r] < basis_[leave_row]);
                if (better) {
                    have_t = true;
                    best_t = limit;
                    leave_row = r;
                    leave_to_upper = to_upper;
                }
            }
            if (!have_t) throw StructuralError("LP unbounded; the variable box forbids this");

            for (std::size_t r = 0; r < m_; ++r)
                beta_[r] -= dir * best_t * tableau_[r][enter];

            if (leave_row == kNone) {  // entering variable flips to its other bound
                at_upper_[enter] = !at_upper_[enter];
                continue;
            }

            const Rational enter_value =
                (at_upper_[enter] ? *upper_[enter] : Rational(0)) + dir * best_t;
            at_upper_[basis_[leave_row]] = leave_to_upper;
            at_upper_[enter] = false;
            pivot(leave_row, enter);
            beta_[leave_row] = enter_value;
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        const Rational pivot_value = tableau_[row][col];
        for (Rational& v : tableau_[row]) v /= pivot_value;
        for (std::size_t r = 0; r < m_; ++r) {
            if (r == row) continue;
            const Rational factor = tableau_[r][col];
            if (factor == 0) continue;
            for (std::size_t j = 0; j < tableau_[r].size(); ++j)
                if (tableau_[row][j] != 0) tableau_[r][j] -= factor * tableau_[row][j];
        }
        set_basis(row, col);
    }

    std::size_t n_struct_;
    std::size_t m_;
    std::vector<Rational> cost_;
    std::vector<std::optional<Rational>> upper_;
    std::vector<bool> at_upper_;
    std::vector<bool> locked_;
    std::vector<bool> basic_flag_;
    std::vector<std::vector<Rational>> tableau_;
    std::vector<Rational> beta_;
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> artificial_;
};

}  // namespace

LinearSolution solve_lp(const LinearProgram& lp) {
    if (lp.rhs.size() != lp.rows.size())
        throw StructuralError("LP has " + std::to_string(lp.rows.size()) + " rows but " +
                              std::to_string(lp.rhs.size()) + " right-hand sides");
    for (const auto& row : lp.rows)
        if (row.size() != lp.num_vars())
            throw StructuralError("LP row width " + std::to_string(row.size()) +
                                  " does not match " + std::to_string(lp.num_vars()) +
                                  " variables");
    if (!lp.var_labels.empty() && lp.var_labels.size() != lp.num_vars())
        throw StructuralError("variable label count mismatch");
    if (!lp.row_labels.empty() && lp.row_labels.size() != lp.num_rows())
        throw StructuralError("row label count mismatch");

    Simplex simplex(lp);
    if (!simplex.phase_one()) {
        LinearSolution sol;
        sol.status = LpStatus::Infeasible;
        return sol;
    }
    simplex.phase_two();
    return simplex.extract();
}

std::string dump_lp(const LinearProgram& lp) {
    std::ostringstream out;
    out << "LP " << lp.num_vars() << " " << lp.num_rows() << "\n";
    out << "MIN";
    for (const Rational& c : lp.objective) out << " " << format_rational(c);
    out << "\n";
    for (std::size_t r = 0; r < lp.num_rows(); ++r) {
        out << "ROW " << format_rational(lp.rhs[r]);
        for (const Rational& a : lp.rows[r]) out << " " << format_rational(a);
        out << "\n";
    }
    out << "BOX 0 1\n";
    return out.str();
}

}  // namespace segcover
