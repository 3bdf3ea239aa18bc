#ifndef LFPOLY_SIMPLEX_HPP
#define LFPOLY_SIMPLEX_HPP

#include "lfpoly/linalg.hpp"

namespace lfpoly {

/// Outcome of an exact LP solve in standard form
///     min c.x   s.t.   A x = b,  x >= 0.
struct SimplexResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    VectorXq x;          // primal optimum (Optimal)
    Rational objective;  // c.x at the optimum
    /// Farkas certificate when Infeasible: y.A <= 0 componentwise, y.b > 0.
    VectorXq farkas;
};

/// Dense tableau simplex over exact rationals with Bland's rule, so it
/// terminates on every input. Sized for this project's LPs (hundreds of
/// columns), not for general consumption.
SimplexResult simplex_solve(const MatrixXq& A, const VectorXq& b, const VectorXq& c);

/// Convenience wrapper for  max obj.p  s.t.  rows.p <= bounds  with p free.
/// Splits p into positive and negative parts and adds slacks.
struct InequalityLPResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    VectorXq point;
    Rational value;
};
InequalityLPResult maximize_over_polyhedron(const VectorXq& obj, const MatrixXq& rows,
                                            const VectorXq& bounds);

} // namespace lfpoly

#endif
