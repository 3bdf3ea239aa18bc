#ifndef LFPOLY_INEQUALITY_HPP
#define LFPOLY_INEQUALITY_HPP

#include <string>

#include "lfpoly/collins_gisin.hpp"
#include "lfpoly/polytope_rep.hpp"

namespace lfpoly {

/// Correlator expectation values of a binary-outcome behavior.
template <class Scalar>
struct CorrelatorForm {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> a;  // <A_x>
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> b;  // <B_y>
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> ab; // <A_x B_y>
};

/// Bell/LF inequality over correlators, oriented as  LHS <= bound.
/// Coefficients are integers; outcome +1 of A_x is outcome label 1.
struct Inequality {
    Scenario scenario;
    Eigen::VectorXi a;   // coefficients of <A_x>
    Eigen::VectorXi b;   // coefficients of <B_y>
    Eigen::MatrixXi ab;  // coefficients of <A_x B_y>
    long long bound = 0;
    std::string label;

    bool same_form(const Inequality& o) const {
        return scenario == o.scenario && a == o.a && b == o.b && ab == o.ab && bound == o.bound;
    }
};

template <class Scalar>
CorrelatorForm<Scalar> to_correlators(const Behavior<Scalar>& beh) {
    if (beh.scenario().outcomes != 2)
        throw InvalidArgument("to_correlators: defined for O = 2");
    if (!check_no_signalling(beh).pass)
        throw NotNoSignalling("to_correlators: marginals are ill-defined on a signalling table");
    const int N = beh.scenario().settings;
    CorrelatorForm<Scalar> c;
    c.a.resize(N);
    c.b.resize(N);
    c.ab.resize(N, N);
    for (int x = 1; x <= N; ++x)
        c.a(x - 1) = beh.mean_marginal_a(x, 1) - beh.mean_marginal_a(x, 2);
    for (int y = 1; y <= N; ++y)
        c.b(y - 1) = beh.mean_marginal_b(y, 1) - beh.mean_marginal_b(y, 2);
    for (int x = 1; x <= N; ++x) {
        for (int y = 1; y <= N; ++y) {
            Scalar s{};
            for (int a = 1; a <= 2; ++a)
                for (int b2 = 1; b2 <= 2; ++b2)
                    s += Scalar(outcome_sign(a) * outcome_sign(b2)) * beh.at(x, a, y, b2);
            c.ab(x - 1, y - 1) = s;
        }
    }
    return c;
}

template <class Scalar>
Behavior<Scalar> from_correlators(const Scenario& s, const CorrelatorForm<Scalar>& c) {
    if (s.outcomes != 2) throw InvalidArgument("from_correlators: defined for O = 2");
    Behavior<Scalar> beh(s);
    const Scalar quarter = Scalar(1) / Scalar(4);
    for (int x = 1; x <= s.settings; ++x)
        for (int y = 1; y <= s.settings; ++y)
            for (int a = 1; a <= 2; ++a)
                for (int b2 = 1; b2 <= 2; ++b2) {
                    const Scalar sa = Scalar(outcome_sign(a));
                    const Scalar sb = Scalar(outcome_sign(b2));
                    beh.at(x, a, y, b2) = quarter * (Scalar(1) + sa * c.a(x - 1) +
                                                     sb * c.b(y - 1) + sa * sb * c.ab(x - 1, y - 1));
                }
    return beh;
}

/// LHS value of the inequality (bound not subtracted). Uses
/// setting-averaged marginals so that the value is linear in the behavior
/// on every table, signalling or not.
template <class Scalar>
Scalar evaluate(const Inequality& ineq, const Behavior<Scalar>& beh) {
    if (!(ineq.scenario == beh.scenario()))
        throw ScenarioMismatch("evaluate: inequality and behavior scenarios differ");
    const int N = ineq.scenario.settings;
    Scalar lhs{};
    for (int x = 1; x <= N; ++x) {
        if (ineq.a(x - 1) != 0)
            lhs += Scalar(ineq.a(x - 1)) *
                   (beh.mean_marginal_a(x, 1) - beh.mean_marginal_a(x, 2));
        if (ineq.b(x - 1) != 0)
            lhs += Scalar(ineq.b(x - 1)) *
                   (beh.mean_marginal_b(x, 1) - beh.mean_marginal_b(x, 2));
    }
    for (int x = 1; x <= N; ++x)
        for (int y = 1; y <= N; ++y) {
            if (ineq.ab(x - 1, y - 1) == 0) continue;
            Scalar corr{};
            for (int a = 1; a <= 2; ++a)
                for (int b2 = 1; b2 <= 2; ++b2)
                    corr += Scalar(outcome_sign(a) * outcome_sign(b2)) * beh.at(x, a, y, b2);
            lhs += Scalar(ineq.ab(x - 1, y - 1)) * corr;
        }
    return lhs;
}

template <class Scalar>
bool violates(const Inequality& ineq, const Behavior<Scalar>& beh) {
    return evaluate(ineq, beh) > Scalar(ineq.bound);
}

/// Correlator form -> Collins-Gisin half-space (O = 2), losslessly:
///   <A_x> = 2 p_x - 1,  <B_y> = 2 r_y - 1,
///   <A_x B_y> = 4 q_xy - 2 p_x - 2 r_y + 1.
inline HRow inequality_to_cg_row(const Inequality& ineq) {
    if (ineq.scenario.outcomes != 2)
        throw InvalidArgument("inequality_to_cg_row: defined for O = 2");
    const int N = ineq.scenario.settings;
    const CgLayout lay(ineq.scenario);
    HRow row;
    row.coeffs = VectorXq::Zero(lay.dim());
    Rational shift = 0;
    for (int x = 1; x <= N; ++x) {
        Rational rowsum = 0;
        for (int y = 1; y <= N; ++y) rowsum += ineq.ab(x - 1, y - 1);
        row.coeffs(lay.a_index(x, 1)) = 2 * Rational(ineq.a(x - 1)) - 2 * rowsum;
        shift += ineq.a(x - 1);
    }
    for (int y = 1; y <= N; ++y) {
        Rational colsum = 0;
        for (int x = 1; x <= N; ++x) colsum += ineq.ab(x - 1, y - 1);
        row.coeffs(lay.b_index(y, 1)) = 2 * Rational(ineq.b(y - 1)) - 2 * colsum;
        shift += ineq.b(y - 1);
    }
    for (int x = 1; x <= N; ++x)
        for (int y = 1; y <= N; ++y) {
            row.coeffs(lay.ab_index(x, y, 1, 1)) = 4 * Rational(ineq.ab(x - 1, y - 1));
            shift -= ineq.ab(x - 1, y - 1);
        }
    row.bound = Rational(ineq.bound) + shift;
    row.normalize();
    return row;
}

/// Collins-Gisin half-space -> correlator form (O = 2), the exact inverse
/// up to overall positive scaling; output is primitive-integer.
inline Inequality cg_row_to_inequality(const HRow& row, const Scenario& s,
                                       const std::string& label = "") {
    if (s.outcomes != 2) throw InvalidArgument("cg_row_to_inequality: defined for O = 2");
    const int N = s.settings;
    const CgLayout lay(s);
    if (row.coeffs.size() != lay.dim())
        throw DimensionMismatch("cg_row_to_inequality: wrong row length");

    VectorXq joint(2 * N + N * N + 1);
    Rational bound_corr = row.bound;
    for (int x = 1; x <= N; ++x)
        for (int y = 1; y <= N; ++y)
            joint(2 * N + (x - 1) * N + (y - 1)) = row.coeffs(lay.ab_index(x, y, 1, 1)) / 4;
    for (int x = 1; x <= N; ++x) {
        Rational rowsum = 0;
        for (int y = 1; y <= N; ++y) rowsum += joint(2 * N + (x - 1) * N + (y - 1));
        joint(x - 1) = row.coeffs(lay.a_index(x, 1)) / 2 + rowsum;
        bound_corr -= joint(x - 1);
    }
    for (int y = 1; y <= N; ++y) {
        Rational colsum = 0;
        for (int x = 1; x <= N; ++x) colsum += joint(2 * N + (x - 1) * N + (y - 1));
        joint(N + y - 1) = row.coeffs(lay.b_index(y, 1)) / 2 + colsum;
        bound_corr -= joint(N + y - 1);
    }
    for (int x = 1; x <= N; ++x)
        for (int y = 1; y <= N; ++y) bound_corr += joint(2 * N + (x - 1) * N + (y - 1));
    joint(2 * N + N * N) = bound_corr;
    make_primitive(joint);

    Inequality out;
    out.scenario = s;
    out.label = label;
    out.a.resize(N);
    out.b.resize(N);
    out.ab.resize(N, N);
    auto as_int = [](const Rational& r) {
        if (abs(numerator(r)) > 1000000000)
            throw InvalidArgument("cg_row_to_inequality: coefficient out of range");
        return static_cast<int>(numerator(r).template convert_to<long long>());
    };
    for (int x = 0; x < N; ++x) out.a(x) = as_int(joint(x));
    for (int y = 0; y < N; ++y) out.b(y) = as_int(joint(N + y));
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) out.ab(x, y) = as_int(joint(2 * N + x * N + y));
    out.bound = numerator(joint(2 * N + N * N)).template convert_to<long long>();
    return out;
}

} // namespace lfpoly

#endif
