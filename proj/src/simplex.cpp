#include "trialkit/simplex.hpp"

#include <stdexcept>

namespace trialkit {

namespace {

// Dense tableau: rows_ x (cols_ + 1), last column the rhs; basis_[r] is the
// variable owning row r.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols),
          cells_(rows, std::vector<Rational>(cols + 1, Rational(0))),
          basis_(rows, 0) {}

    Rational& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
    Rational& rhs(std::size_t r) { return cells_[r][cols_]; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t basis(std::size_t r) const { return basis_[r]; }
    void set_basis(std::size_t r, std::size_t var) { basis_[r] = var; }

    void pivot(std::size_t pr, std::size_t pc) {
        Rational inv = cells_[pr][pc];
        for (auto& cell : cells_[pr]) cell /= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pr) continue;
            Rational factor = cells_[r][pc];
            if (factor == 0) continue;
            for (std::size_t c = 0; c <= cols_; ++c)
                cells_[r][c] -= factor * cells_[pr][c];
        }
        basis_[pr] = pc;
    }

    // Maximizes reduced_obj over the current basis; Bland's rule. Returns
    // false when unbounded. active_cols limits eligible entering columns.
    bool optimize(std::vector<Rational>& obj, Rational& value, std::size_t active_cols) {
        // Price out the basic variables first.
        for (std::size_t r = 0; r < rows_; ++r) {
            Rational factor = obj[basis_[r]];
            if (factor == 0) continue;
            for (std::size_t c = 0; c < cols_; ++c) obj[c] -= factor * cells_[r][c];
            value += factor * rhs(r);
            obj[basis_[r]] = 0;
        }
        for (;;) {
            std::size_t entering = active_cols;
            for (std::size_t c = 0; c < active_cols; ++c) {
                if (obj[c] > 0) {  // Bland: first improving column
                    entering = c;
                    break;
                }
            }
            if (entering == active_cols) return true;  // optimal

            std::size_t leaving = rows_;
            Rational best_ratio = 0;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (cells_[r][entering] <= 0) continue;
                Rational ratio = rhs(r) / cells_[r][entering];
                if (leaving == rows_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[leaving])) {
                    leaving = r;
                    best_ratio = ratio;
                }
            }
            if (leaving == rows_) return false;  // unbounded

            Rational coeff = obj[entering];
            pivot(leaving, entering);
            // Update the objective row against the new pivot row.
            for (std::size_t c = 0; c <= cols_; ++c) {
                Rational delta = coeff * cells_[leaving][c];
                if (c == cols_)
                    value += delta;
                else
                    obj[c] -= delta;
            }
            obj[entering] = 0;
        }
    }

private:
    std::size_t rows_, cols_;
    std::vector<std::vector<Rational>> cells_;
    std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
    std::size_t n = static_cast<std::size_t>(lp.num_vars);
    std::size_t m_le = lp.le_rows.size();
    std::size_t m_eq = lp.eq_rows.size();
    std::size_t rows = m_le + m_eq;

    // Columns: structural | slack (per <= row) | artificial (as needed).
    std::size_t slack_base = n;
    std::size_t art_base = n + m_le;

    // A <= row with negative rhs is flipped, turning its slack coefficient
    // to -1, so it needs an artificial; every eq row gets one.
    std::vector<int> need_art(rows, 0);
    std::size_t num_art = 0;
    for (std::size_t r = 0; r < m_le; ++r)
        if (lp.le_rhs[r] < 0) need_art[r] = 1;
    for (std::size_t r = 0; r < m_eq; ++r) need_art[m_le + r] = 1;
    for (int flag : need_art) num_art += static_cast<std::size_t>(flag);

    std::size_t cols = n + m_le + num_art;
    Tableau tab(rows, cols);

    std::size_t art_next = art_base;
    for (std::size_t r = 0; r < rows; ++r) {
        bool is_le = r < m_le;
        const auto& coeffs = is_le ? lp.le_rows[r] : lp.eq_rows[r - m_le];
        Rational rhs = is_le ? lp.le_rhs[r] : lp.eq_rhs[r - m_le];
        bool flip = rhs < 0;
        for (std::size_t c = 0; c < n; ++c)
            tab.at(r, c) = flip ? -coeffs[c] : coeffs[c];
        tab.rhs(r) = flip ? -rhs : rhs;
        if (is_le) tab.at(r, slack_base + r) = flip ? Rational(-1) : Rational(1);
        if (need_art[r]) {
            tab.at(r, art_next) = 1;
            tab.set_basis(r, art_next);
            ++art_next;
        } else {
            tab.set_basis(r, slack_base + r);
        }
    }

    LpResult result;

    if (num_art > 0) {
        // Phase 1: maximize -(sum of artificials).
        std::vector<Rational> phase1(cols, Rational(0));
        for (std::size_t c = art_base; c < cols; ++c) phase1[c] = -1;
        Rational value1 = 0;
        if (!tab.optimize(phase1, value1, cols))
            throw std::logic_error("phase-1 simplex cannot be unbounded");
        if (value1 != 0) {
            result.status = LpStatus::Infeasible;
            return result;
        }
        // Kick surviving zero-value artificials out of the basis.
        for (std::size_t r = 0; r < tab.rows(); ++r) {
            if (tab.basis(r) < art_base) continue;
            bool pivoted = false;
            for (std::size_t c = 0; c < art_base && !pivoted; ++c) {
                if (tab.at(r, c) != 0) {
                    tab.pivot(r, c);
                    pivoted = true;
                }
            }
            // A row with no eligible pivot is redundant; its artificial
            // stays basic at zero and never re-enters (phase 2 only
            // considers columns below art_base).
        }
    }

    std::vector<Rational> objective(cols, Rational(0));
    for (std::size_t c = 0; c < n; ++c) objective[c] = lp.objective[c];
    Rational value = 0;
    if (!tab.optimize(objective, value, art_base)) {
        result.status = LpStatus::Unbounded;
        return result;
    }

    result.status = LpStatus::Optimal;
    result.value = value;
    result.x.assign(n, Rational(0));
    for (std::size_t r = 0; r < tab.rows(); ++r)
        if (tab.basis(r) < n) result.x[tab.basis(r)] = tab.rhs(r);
    return result;
}

}  // namespace trialkit
