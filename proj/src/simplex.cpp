#include "lfpoly/simplex.hpp"

#include <vector>

namespace lfpoly {

namespace {

// Tableau layout: m constraint rows over columns [0, n) original and
// [n, n+m) artificial, plus a rhs column, plus one cost row. The artificial
// block doubles as a running copy of B^-1, which is where the dual
// multipliers are read from.
struct Tableau {
    MatrixXq t;               // (m+1) x (n+m+1); last row = reduced costs
    std::vector<int> basis;   // column basic in each row
    int m, n;

    Rational& rhs(int i) { return t(i, n + m); }
    Rational& cost(int j) { return t(m, j); }

    void pivot(int row, int col) {
        const Rational p = t(row, col);
        t.row(row) /= p;
        for (int i = 0; i <= m; ++i) {
            if (i == row || t(i, col) == 0) continue;
            t.row(i) -= t(i, col) * t.row(row);
        }
        basis[static_cast<size_t>(row)] = col;
    }

    // Bland: entering = lowest-index column with negative reduced cost,
    // leaving = lowest-index basic variable among the ratio-test minima.
    // Returns false on unboundedness.
    bool run(int allowed_cols) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < allowed_cols; ++j) {
                if (cost(j) < 0) { enter = j; break; }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m; ++i) {
                if (t(i, enter) <= 0) continue;
                const Rational ratio = rhs(i) / t(i, enter);
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[static_cast<size_t>(i)] <
                                          basis[static_cast<size_t>(leave)])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    void set_costs(const VectorXq& c, int limit) {
        for (int j = 0; j < n + m; ++j) cost(j) = 0;
        cost(n + m) = 0;
        for (int j = 0; j < limit; ++j) cost(j) = c(j);
        // price out the basic columns
        for (int i = 0; i < m; ++i) {
            const int bj = basis[static_cast<size_t>(i)];
            if (t(m, bj) == 0) continue;
            t.row(m) -= t(m, bj) * t.row(i);
        }
    }
};

} // namespace

SimplexResult simplex_solve(const MatrixXq& A, const VectorXq& b, const VectorXq& c) {
    const int m = static_cast<int>(A.rows());
    const int n = static_cast<int>(A.cols());

    Tableau tb;
    tb.m = m;
    tb.n = n;
    tb.t = MatrixXq::Zero(m + 1, n + m + 1);
    tb.basis.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        const bool flip = b(i) < 0;
        for (int j = 0; j < n; ++j) tb.t(i, j) = flip ? Rational(-A(i, j)) : A(i, j);
        tb.t(i, n + i) = 1;
        tb.rhs(i) = flip ? Rational(-b(i)) : b(i);
        tb.basis[static_cast<size_t>(i)] = n + i;
    }

    // Phase I: min sum of artificials.
    VectorXq phase1 = VectorXq::Zero(n + m);
    for (int i = 0; i < m; ++i) phase1(n + i) = 1;
    tb.set_costs(phase1, n + m);
    tb.run(n); // artificials may leave but never re-enter

    SimplexResult res;
    Rational infeas = -tb.t(m, n + m); // phase-I objective value
    if (infeas > 0) {
        res.status = SimplexResult::Status::Infeasible;
        // y = c_B B^-1 read off the artificial block: cost row there holds
        // 1 - y_i, adjusted for rows whose b was flipped.
        res.farkas = VectorXq::Zero(m);
        for (int i = 0; i < m; ++i) {
            Rational yi = Rational(1) - tb.t(m, n + i);
            res.farkas(i) = (b(i) < 0) ? Rational(-yi) : yi;
        }
        return res;
    }

    // Drive any artificial still basic at zero out of the basis.
    for (int i = 0; i < m; ++i) {
        if (tb.basis[static_cast<size_t>(i)] < n) continue;
        int col = -1;
        for (int j = 0; j < n; ++j) {
            if (tb.t(i, j) != 0) { col = j; break; }
        }
        if (col >= 0) tb.pivot(i, col);
        // else: redundant row; harmless to leave, the artificial stays 0
    }

    // Phase II.
    tb.set_costs(c, n);
    if (!tb.run(n)) {
        res.status = SimplexResult::Status::Unbounded;
        return res;
    }

    res.status = SimplexResult::Status::Optimal;
    res.x = VectorXq::Zero(n);
    for (int i = 0; i < m; ++i) {
        if (tb.basis[static_cast<size_t>(i)] < n) res.x(tb.basis[static_cast<size_t>(i)]) = tb.rhs(i);
    }
    res.objective = c.dot(res.x);
    return res;
}

InequalityLPResult maximize_over_polyhedron(const VectorXq& obj, const MatrixXq& rows,
                                            const VectorXq& bounds) {
    const int m = static_cast<int>(rows.rows());
    const int d = static_cast<int>(rows.cols());
    // p = u - w, slack s: rows.(u - w) + s = bounds.
    MatrixXq A(m, 2 * d + m);
    A.setZero();
    A.block(0, 0, m, d) = rows;
    A.block(0, d, m, d) = -rows;
    for (int i = 0; i < m; ++i) A(i, 2 * d + i) = 1;
    VectorXq c = VectorXq::Zero(2 * d + m);
    c.head(d) = -obj;
    c.segment(d, d) = obj;

    const SimplexResult r = simplex_solve(A, bounds, c);
    InequalityLPResult out;
    if (r.status == SimplexResult::Status::Infeasible) {
        out.status = InequalityLPResult::Status::Infeasible;
    } else if (r.status == SimplexResult::Status::Unbounded) {
        out.status = InequalityLPResult::Status::Unbounded;
    } else {
        out.status = InequalityLPResult::Status::Optimal;
        out.point = r.x.head(d) - r.x.segment(d, d);
        out.value = -r.objective;
    }
    return out;
}

} // namespace lfpoly
