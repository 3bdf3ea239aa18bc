#ifndef LFPOLY_SEESAW_HPP
#define LFPOLY_SEESAW_HPP

#include <cstdint>

#include "lfpoly/inequality.hpp"
#include "lfpoly/quantum.hpp"

namespace lfpoly {

struct SeesawOptions {
    int dim_a = 2;
    int dim_b = 2;
    int restarts = 50;
    uint64_t seed = 1;
    int max_rounds = 1000;
    int threads = 0; // 0 = hardware concurrency
};

struct SeesawResult {
    double value = 0.0;
    BipartiteState state; // rank-1 optimizer of the final round
    std::vector<DichotomicObservable> alice;
    std::vector<DichotomicObservable> bob;
    std::vector<double> schmidt; // of the state's top eigenvector
    int iterations = 0;          // rounds used by the winning restart
    int restarts_used = 0;
    int winning_restart = 0;
    bool converged = false;
    /// Objective after every half-step (state, Alice, Bob, repeating) of
    /// the winning restart; nondecreasing within numerical tolerance.
    std::vector<double> objective_trace;
};

/// Alternating ascent on Tr[rho W(A,B)]: state step picks the Bell
/// operator's top eigenprojector, party steps replace each observable by
/// sign() of its Hermitian environment. Each half-step is an exact block
/// maximizer, so the objective never decreases. Restarts run in parallel
/// with per-restart seeds; the best value wins, lowest restart index on
/// ties, so the outcome is scheduling-independent.
SeesawResult seesaw_maximize(const Inequality& ineq, const SeesawOptions& opt);

/// Bell operator of the inequality for the given observables.
MatrixXc bell_operator(const Inequality& ineq, const std::vector<DichotomicObservable>& alice,
                       const std::vector<DichotomicObservable>& bob);

/// Largest white-noise fraction eps for which the strategy still reaches
/// the bound: the LHS is affine in eps, so the crossing is solved in
/// closed form from the two endpoint values (the eps = 1 endpoint uses the
/// behavior of the maximally mixed state with the same observables, which
/// carries the observables' traces). Throws NoViolation if the strategy
/// does not violate the inequality; returns 1 when even pure noise does.
double white_noise_tolerance(const BipartiteState& state,
                             const std::vector<DichotomicObservable>& alice,
                             const std::vector<DichotomicObservable>& bob,
                             const Inequality& ineq);

} // namespace lfpoly

#endif
