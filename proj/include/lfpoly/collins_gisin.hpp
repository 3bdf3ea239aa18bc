#ifndef LFPOLY_COLLINS_GISIN_HPP
#define LFPOLY_COLLINS_GISIN_HPP

#include "lfpoly/behavior.hpp"

namespace lfpoly {

// Collins-Gisin coordinates: a minimal parameterization of no-signalling
// behaviors by Alice marginals wp(a|x), Bob marginals wp(b|y) (outcomes
// 1..O-1 only) and joints wp(a,b|x,y) (both outcomes < O), in this order,
// joints row-major over (x,y) then (a,b). For O = 2 this is
//   ( wp(+|x), wp(+|y), wp(++|xy) )
// of dimension 2N + N^2.

struct CgLayout {
    Scenario scenario;
    explicit CgLayout(const Scenario& s) : scenario(s) { require_valid(s); }

    int k() const { return scenario.outcomes - 1; }
    int dim() const { return scenario.cg_dimension(); }
    int a_index(int x, int a) const { return (x - 1) * k() + (a - 1); }
    int b_index(int y, int b) const { return scenario.settings * k() + (y - 1) * k() + (b - 1); }
    int ab_index(int x, int y, int a, int b) const {
        const int block = 2 * scenario.settings * k();
        const int pair = (x - 1) * scenario.settings + (y - 1);
        return block + pair * k() * k() + (a - 1) * k() + (b - 1);
    }
};

/// Behavior -> Collins-Gisin vector. Requires no-signalling (the marginals
/// are otherwise not a function of the behavior); float tables are accepted
/// within the 1e-10 tolerance and use setting-averaged marginals.
template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> collins_gisin(const Behavior<Scalar>& b) {
    if (!check_no_signalling(b).pass)
        throw NotNoSignalling("collins_gisin: behavior is signalling");
    const CgLayout lay(b.scenario());
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> v(lay.dim());
    const int N = b.scenario().settings, K = lay.k();
    for (int x = 1; x <= N; ++x)
        for (int a = 1; a <= K; ++a) v(lay.a_index(x, a)) = b.mean_marginal_a(x, a);
    for (int y = 1; y <= N; ++y)
        for (int bb = 1; bb <= K; ++bb) v(lay.b_index(y, bb)) = b.mean_marginal_b(y, bb);
    for (int x = 1; x <= N; ++x)
        for (int y = 1; y <= N; ++y)
            for (int a = 1; a <= K; ++a)
                for (int bb = 1; bb <= K; ++bb)
                    v(lay.ab_index(x, y, a, bb)) = b.at(x, a, y, bb);
    return v;
}

/// The binary-outcome coordinate map ( wp(+|x), wp(+|y), wp(++|xy) ).
inline VectorXq to_collins_gisin(const BehaviorQ& b) {
    if (b.scenario().outcomes != 2)
        throw InvalidArgument("to_collins_gisin: defined for O = 2 (use full-table mode otherwise)");
    return collins_gisin(b);
}

/// Inverse map: any Collins-Gisin vector determines a unique no-signalling
/// table (entries may leave [0,1] for points outside the NS polytope; see
/// is_valid_distribution).
template <class Scalar>
Behavior<Scalar> from_collins_gisin(const Scenario& s,
                                    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& v) {
    const CgLayout lay(s);
    if (v.size() != lay.dim()) throw DimensionMismatch("from_collins_gisin: wrong length");
    Behavior<Scalar> b(s);
    const int N = s.settings, O = s.outcomes, K = lay.k();
    for (int x = 1; x <= N; ++x) {
        for (int y = 1; y <= N; ++y) {
            Scalar corner = Scalar(1);
            for (int a = 1; a <= K; ++a) corner -= v(lay.a_index(x, a));
            for (int bb = 1; bb <= K; ++bb) corner -= v(lay.b_index(y, bb));
            for (int a = 1; a <= K; ++a) {
                Scalar row_rest = v(lay.a_index(x, a));
                for (int bb = 1; bb <= K; ++bb) {
                    const Scalar q = v(lay.ab_index(x, y, a, bb));
                    b.at(x, a, y, bb) = q;
                    row_rest -= q;
                    corner += q;
                }
                b.at(x, a, y, O) = row_rest;
            }
            for (int bb = 1; bb <= K; ++bb) {
                Scalar col_rest = v(lay.b_index(y, bb));
                for (int a = 1; a <= K; ++a) col_rest -= v(lay.ab_index(x, y, a, bb));
                b.at(x, O, y, bb) = col_rest;
            }
            b.at(x, O, y, O) = corner;
        }
    }
    return b;
}

inline BehaviorD to_double(const BehaviorQ& b) {
    BehaviorD out(b.scenario());
    const int n = b.scenario().settings, o = b.scenario().outcomes;
    for (int x = 1; x <= n; ++x)
        for (int a = 1; a <= o; ++a)
            for (int y = 1; y <= n; ++y)
                for (int bb = 1; bb <= o; ++bb)
                    out.at(x, a, y, bb) = detail::to_double(b.at(x, a, y, bb));
    return out;
}

/// Float -> exact promotion: each Collins-Gisin coordinate rounded to
/// denominator 10^9. Downstream certificates then speak about the rounded
/// point; the radius says how far away the float point can be.
struct PromotedPoint {
    VectorXq point;
    double rounding_radius = 0.0;
};

inline PromotedPoint promote_to_rational(const BehaviorD& b) {
    const Eigen::VectorXd cg = collins_gisin(b);
    PromotedPoint out;
    out.point.resize(cg.size());
    for (Eigen::Index i = 0; i < cg.size(); ++i) {
        const long long num = std::llround(cg(i) * 1e9);
        out.point(i) = Rational(Integer(num), Integer(1000000000));
        const double back = static_cast<double>(num) / 1e9;
        out.rounding_radius = std::max(out.rounding_radius, std::abs(back - cg(i)));
    }
    return out;
}

} // namespace lfpoly

#endif
