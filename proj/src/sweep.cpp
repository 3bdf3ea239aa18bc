#include "lfpoly/sweep.hpp"

#include <limits>

namespace lfpoly {

BehaviorD sweep_behavior(const MeasurementAngles& angles, double mu) {
    std::vector<DichotomicObservable> alice, bob;
    for (double t : angles.alice()) alice.push_back(observable_from_angle(t));
    for (double t : angles.bob()) bob.push_back(observable_from_angle(t));
    return behavior_from_strategy(rho_mu(mu), alice, bob);
}

std::vector<SweepRow> mu_sweep(const MeasurementAngles& angles, const std::vector<double>& mus,
                               const std::vector<Inequality>& ineqs) {
    std::vector<SweepRow> rows;
    rows.reserve(mus.size() * ineqs.size());
    for (double mu : mus) {
        const BehaviorD b = sweep_behavior(angles, mu);
        for (const auto& ineq : ineqs) {
            SweepRow row;
            row.mu = mu;
            row.label = ineq.label;
            row.lhs = evaluate(ineq, b);
            row.bound = ineq.bound;
            row.violated = row.lhs > static_cast<double>(ineq.bound);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

double violation_threshold(const MeasurementAngles& angles, const Inequality& ineq, double tol) {
    auto excess = [&](double mu) {
        return evaluate(ineq, sweep_behavior(angles, mu)) - static_cast<double>(ineq.bound);
    };
    if (excess(1.0) <= 0) return std::numeric_limits<double>::infinity();
    double lo = 0.0, hi = 1.0;
    if (excess(lo) > 0) return 0.0;
    while (hi - lo > tol) {
        const double mid = (lo + hi) / 2;
        (excess(mid) > 0 ? hi : lo) = mid;
    }
    return (lo + hi) / 2;
}

} // namespace lfpoly
