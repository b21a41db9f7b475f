#include "exptrop/lp.hpp"

#include <optional>

namespace exptrop {

namespace {

struct Tableau {
    Matrix<ExactReal> rows;  // each row: coefficients followed by the right-hand side
    std::vector<std::size_t> basis;
    std::size_t cols = 0;

    const ExactReal& rhs(std::size_t r) const { return rows[r][cols]; }

    void pivot(std::size_t r, std::size_t c) {
        const ExactReal inv = rows[r][c].inverse();
        for (auto& x : rows[r]) {
            if (!x.is_zero()) x *= inv;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const ExactReal f = rows[i][c];
            for (std::size_t k = 0; k <= cols; ++k) {
                if (!rows[r][k].is_zero()) rows[i][k] -= f * rows[r][k];
            }
        }
        basis[r] = c;
    }

    // Runs the simplex method for `cost` restricted to columns < active. Returns false if unbounded.
    bool optimize(const RealVec& cost, std::size_t active) {
        for (;;) {
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < active && !entering; ++j) {
                ExactReal d = cost[j];
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    if (!rows[i][j].is_zero() && !cost[basis[i]].is_zero()) d -= cost[basis[i]] * rows[i][j];
                }
                if (d.sign() > 0) entering = j;
            }
            if (!entering) return true;
            const std::size_t j = *entering;
            std::optional<std::size_t> leave;
            ExactReal best;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][j].sign() <= 0) continue;
                ExactReal ratio = rhs(i) / rows[i][j];
                if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave) return false;
            pivot(*leave, j);
        }
    }

    ExactReal objective(const RealVec& cost) const {
        ExactReal v;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!cost[basis[i]].is_zero()) v += cost[basis[i]] * rhs(i);
        }
        return v;
    }
};

LpResult solve(const RealVec* c, std::size_t n, const Matrix<ExactReal>& A, const RealVec& b,
               const Matrix<ExactReal>& E, const RealVec& f) {
    if (A.size() != b.size() || E.size() != f.size()) throw DimensionMismatch("LP right-hand side length");
    for (const auto& row : A)
        if (row.size() != n) throw DimensionMismatch("LP constraint width");
    for (const auto& row : E)
        if (row.size() != n) throw DimensionMismatch("LP constraint width");

    const std::size_t m_ineq = A.size();
    const std::size_t m = m_ineq + E.size();
    const std::size_t structural = 2 * n + m_ineq;

    // Rows needing an artificial basis variable: equalities and inequalities with negative rhs.
    std::vector<bool> needs_art(m, false);
    std::size_t n_art = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const bool negative = i < m_ineq ? b[i].sign() < 0 : true;
        needs_art[i] = negative;
        if (negative) ++n_art;
    }

    Tableau t;
    t.cols = structural + n_art;
    t.rows.assign(m, RealVec(t.cols + 1));
    t.basis.assign(m, 0);
    std::size_t art = structural;
    for (std::size_t i = 0; i < m; ++i) {
        const RealVec& row = i < m_ineq ? A[i] : E[i - m_ineq];
        ExactReal r = i < m_ineq ? b[i] : f[i - m_ineq];
        const bool flip = r.sign() < 0;
        auto& out = t.rows[i];
        for (std::size_t k = 0; k < n; ++k) {
            out[k] = flip ? -row[k] : row[k];
            out[n + k] = -out[k];
        }
        if (i < m_ineq) out[2 * n + i] = flip ? ExactReal(-1) : ExactReal(1);
        out[t.cols] = flip ? -r : r;
        if (needs_art[i]) {
            out[art] = ExactReal(1);
            t.basis[i] = art++;
        } else {
            t.basis[i] = 2 * n + i;
        }
    }

    if (n_art > 0) {
        RealVec phase1(t.cols, ExactReal(0));
        for (std::size_t j = structural; j < t.cols; ++j) phase1[j] = ExactReal(-1);
        t.optimize(phase1, t.cols);
        if (t.objective(phase1).sign() < 0) return {LpStatus::infeasible, {}, {}};
        // Drive remaining artificials out of the basis; drop redundant rows.
        for (std::size_t i = 0; i < t.rows.size();) {
            if (t.basis[i] < structural) {
                ++i;
                continue;
            }
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < structural && !col; ++j)
                if (!t.rows[i][j].is_zero()) col = j;
            if (col) {
                t.pivot(i, *col);
                ++i;
            } else {
                t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
                t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
        for (auto& row : t.rows) {
            row[structural] = row[t.cols];
            row.resize(structural + 1);
        }
        t.cols = structural;
    }

    RealVec cost(t.cols, ExactReal(0));
    if (c) {
        for (std::size_t k = 0; k < n; ++k) {
            cost[k] = (*c)[k];
            cost[n + k] = -(*c)[k];
        }
        if (!t.optimize(cost, t.cols)) return {LpStatus::unbounded, {}, {}};
    }

    LpResult res;
    res.status = LpStatus::optimal;
    res.value = t.objective(cost);
    res.x.assign(n, ExactReal(0));
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const std::size_t j = t.basis[i];
        if (j < n) res.x[j] += t.rhs(i);
        else if (j < 2 * n) res.x[j - n] -= t.rhs(i);
    }
    return res;
}

}  // namespace

LpResult maximize(const RealVec& c, const Matrix<ExactReal>& A, const RealVec& b,
                  const Matrix<ExactReal>& E, const RealVec& f) {
    return solve(&c, c.size(), A, b, E, f);
}

LpResult feasible_point(std::size_t dim, const Matrix<ExactReal>& A, const RealVec& b,
                        const Matrix<ExactReal>& E, const RealVec& f) {
    return solve(nullptr, dim, A, b, E, f);
}

}  // namespace exptrop
