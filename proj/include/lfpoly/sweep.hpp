#ifndef LFPOLY_SWEEP_HPP
#define LFPOLY_SWEEP_HPP

#include <string>
#include <vector>

#include "lfpoly/inequality.hpp"
#include "lfpoly/quantum.hpp"

namespace lfpoly {

/// Behavior of rho_mu measured with the equatorial observables at the
/// given angles.
BehaviorD sweep_behavior(const MeasurementAngles& angles, double mu);

struct SweepRow {
    double mu = 0.0;
    std::string label;
    double lhs = 0.0;
    long long bound = 0;
    bool violated = false;
};

/// One row per (mu, inequality), in the given orders.
std::vector<SweepRow> mu_sweep(const MeasurementAngles& angles, const std::vector<double>& mus,
                               const std::vector<Inequality>& ineqs);

/// Smallest mu in [0,1] at which the inequality is violated, located by
/// bisection on the numeric sweep (the LHS is affine and increasing in mu
/// for these states). Returns +infinity when even mu = 1 does not violate.
double violation_threshold(const MeasurementAngles& angles, const Inequality& ineq,
                           double tol = 1e-9);

} // namespace lfpoly

#endif
