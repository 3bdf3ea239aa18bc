#ifndef LFPOLY_BEHAVIOR_HPP
#define LFPOLY_BEHAVIOR_HPP

#include <cmath>

#include "lfpoly/linalg.hpp"

namespace lfpoly {

/// Bipartite Bell scenario: N settings per party, O outcomes per setting.
struct Scenario {
    int settings = 0;
    int outcomes = 0;

    bool operator==(const Scenario&) const = default;

    /// Collins-Gisin dimension 2N(O-1) + N^2 (O-1)^2.
    int cg_dimension() const {
        const int k = outcomes - 1;
        return 2 * settings * k + settings * settings * k * k;
    }
};

inline void require_valid(const Scenario& s) {
    if (s.settings < 1 || s.outcomes < 2)
        throw InvalidArgument("scenario requires N >= 1, O >= 2");
}

/// Conditional probability table wp(a,b|x,y). Scalar is Rational for exact
/// work or double for quantum-generated statistics. Stored as an
/// (N*O) x (N*O) matrix over row (x,a) and column (y,b); the (x,y) block is
/// the O x O outcome table for that setting pair.
template <class Scalar>
class Behavior {
public:
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    Behavior() = default;
    explicit Behavior(const Scenario& s)
        : scenario_(s), table_(Matrix::Zero(s.settings * s.outcomes, s.settings * s.outcomes)) {
        require_valid(s);
    }

    const Scenario& scenario() const { return scenario_; }
    const Matrix& table() const { return table_; }

    /// wp(a,b|x,y); all indices 1-based, outcomes in 1..O.
    Scalar& at(int x, int a, int y, int b) {
        return table_((x - 1) * scenario_.outcomes + (a - 1),
                      (y - 1) * scenario_.outcomes + (b - 1));
    }
    const Scalar& at(int x, int a, int y, int b) const {
        return table_((x - 1) * scenario_.outcomes + (a - 1),
                      (y - 1) * scenario_.outcomes + (b - 1));
    }

    /// Alice-side marginal sum_b wp(a,b|x,y) for a specific y.
    Scalar marginal_a(int x, int a, int y) const {
        Scalar s{};
        for (int b = 1; b <= scenario_.outcomes; ++b) s += at(x, a, y, b);
        return s;
    }
    Scalar marginal_b(int y, int b, int x) const {
        Scalar s{};
        for (int a = 1; a <= scenario_.outcomes; ++a) s += at(x, a, y, b);
        return s;
    }

    /// Setting-averaged marginals; equal to any single-slice marginal on a
    /// no-signalling table and well-defined (and linear) on any table.
    Scalar mean_marginal_a(int x, int a) const {
        Scalar s{};
        for (int y = 1; y <= scenario_.settings; ++y) s += marginal_a(x, a, y);
        return s / Scalar(scenario_.settings);
    }
    Scalar mean_marginal_b(int y, int b) const {
        Scalar s{};
        for (int x = 1; x <= scenario_.settings; ++x) s += marginal_b(y, b, x);
        return s / Scalar(scenario_.settings);
    }

private:
    Scenario scenario_;
    Matrix table_;
};

using BehaviorQ = Behavior<Rational>;
using BehaviorD = Behavior<double>;

/// For O = 2: outcome label 1 is the +1 value of the random variable.
inline int outcome_sign(int label) { return label == 1 ? 1 : -1; }

struct NoSignallingReport {
    bool pass = false;
    double worst_deviation = 0.0;
};

namespace detail {
inline double to_double(const Rational& r) { return r.template convert_to<double>(); }
inline double to_double(double d) { return d; }
template <class S> bool ns_pass(const S& worst);
template <> inline bool ns_pass<Rational>(const Rational& worst) { return worst == 0; }
template <> inline bool ns_pass<double>(const double& worst) { return worst <= 1e-10; }
} // namespace detail

/// Marginal independence of the remote setting: exact in rational mode,
/// within 1e-10 in float mode. Reports the largest deviation either way.
template <class Scalar>
NoSignallingReport check_no_signalling(const Behavior<Scalar>& b) {
    const auto& sc = b.scenario();
    Scalar worst{};
    auto track = [&](Scalar d) {
        if (d < Scalar{}) d = -d;
        if (worst < d) worst = d;
    };
    for (int x = 1; x <= sc.settings; ++x)
        for (int a = 1; a <= sc.outcomes; ++a)
            for (int y = 2; y <= sc.settings; ++y)
                track(b.marginal_a(x, a, y) - b.marginal_a(x, a, 1));
    for (int y = 1; y <= sc.settings; ++y)
        for (int b2 = 1; b2 <= sc.outcomes; ++b2)
            for (int x = 2; x <= sc.settings; ++x)
                track(b.marginal_b(y, b2, x) - b.marginal_b(y, b2, 1));
    return {detail::ns_pass<Scalar>(worst), detail::to_double(worst)};
}

/// Nonnegative entries and unit slice sums (exact, or within 1e-10).
template <class Scalar>
bool is_valid_distribution(const Behavior<Scalar>& b) {
    const auto& sc = b.scenario();
    const bool exact = std::is_same_v<Scalar, Rational>;
    for (int x = 1; x <= sc.settings; ++x) {
        for (int y = 1; y <= sc.settings; ++y) {
            Scalar sum{};
            for (int a = 1; a <= sc.outcomes; ++a) {
                for (int bb = 1; bb <= sc.outcomes; ++bb) {
                    const Scalar& v = b.at(x, a, y, bb);
                    if (exact ? (v < Scalar{}) : (detail::to_double(v) < -1e-10)) return false;
                    sum += v;
                }
            }
            const double dev = std::abs(detail::to_double(sum) - 1.0);
            if (exact ? (sum != Scalar(1)) : (dev > 1e-10)) return false;
        }
    }
    return true;
}

} // namespace lfpoly

#endif
