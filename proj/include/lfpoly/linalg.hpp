#ifndef LFPOLY_LINALG_HPP
#define LFPOLY_LINALG_HPP

#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <vector>

#include "lfpoly/rational.hpp"

namespace lfpoly {

using VectorXq = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using MatrixXq = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Scales v in place by the unique positive rational that makes all entries
/// integers with overall gcd 1. The zero vector is left untouched.
inline void make_primitive(VectorXq& v) {
    Integer l = 1;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        l = lcm(l, Integer(denominator(v(i))));
    Integer g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        g = gcd(g, Integer(numerator(v(i)) * (l / denominator(v(i)))));
    if (g == 0) return;
    const Rational scale(l, g);
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) *= scale;
}

inline bool lex_less(const VectorXq& a, const VectorXq& b) {
    for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
        if (a(i) != b(i)) return a(i) < b(i);
    }
    return a.size() < b.size();
}

/// Rank over the rationals by fraction-free-ish Gaussian elimination
/// (plain division is exact here).
inline int rank(MatrixXq m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    int r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (m(i, c) != 0) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        m.row(pivot).swap(m.row(r));
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            if (m(i, c) == 0) continue;
            const Rational f = m(i, c) / m(r, c);
            for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

/// Number of affinely independent points among the rows, i.e. the rank of
/// the homogenized matrix [1 | p].
inline int affine_rank(const std::vector<VectorXq>& points) {
    if (points.empty()) return 0;
    MatrixXq h(static_cast<Eigen::Index>(points.size()), points[0].size() + 1);
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        h(i, 0) = 1;
        h.row(i).tail(points[0].size()) = points[static_cast<size_t>(i)].transpose();
    }
    return rank(std::move(h));
}

} // namespace lfpoly

#endif
