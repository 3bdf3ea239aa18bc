#include "lfpoly/membership.hpp"

namespace lfpoly {

LPCertificate lp_membership(const VectorXq& point, const VRepresentation& v) {
    const int d = v.dimension;
    if (point.size() != d) throw DimensionMismatch("lp_membership: point dimension mismatch");
    const int n = static_cast<int>(v.vertices.size());

    // Feasibility of { sum_i w_i v_i = point, sum_i w_i = 1, w >= 0 }.
    MatrixXq A(d + 1, n);
    for (int j = 0; j < n; ++j) {
        A.col(j).head(d) = v.vertices[static_cast<size_t>(j)];
        A(d, j) = 1;
    }
    VectorXq b(d + 1);
    b.head(d) = point;
    b(d) = 1;

    const SimplexResult r = simplex_solve(A, b, VectorXq::Zero(n));
    LPCertificate cert;
    if (r.status == SimplexResult::Status::Optimal) {
        cert.verdict = LPCertificate::Verdict::Inside;
        for (int j = 0; j < n; ++j) {
            if (r.x(j) != 0) cert.weights[j] = r.x(j);
        }
    } else {
        // Farkas y = (w, w0): w.v_i + w0 <= 0 for all i, w.point + w0 > 0,
        // i.e. w.p <= -w0 separates.
        cert.verdict = LPCertificate::Verdict::Outside;
        cert.separator.coeffs = r.farkas.head(d);
        cert.separator.bound = -r.farkas(d);
        cert.separator.normalize();
    }
    return cert;
}

bool verify_certificate(const LPCertificate& cert, const VectorXq& point,
                        const VRepresentation& v) {
    if (point.size() != v.dimension) return false;
    if (cert.verdict == LPCertificate::Verdict::Inside) {
        Rational total = 0;
        VectorXq mix = VectorXq::Zero(v.dimension);
        for (const auto& [idx, w] : cert.weights) {
            if (idx < 0 || idx >= static_cast<int>(v.vertices.size())) return false;
            if (w < 0) return false;
            total += w;
            mix += w * v.vertices[static_cast<size_t>(idx)];
        }
        return total == 1 && mix == point;
    }
    for (const auto& vert : v.vertices) {
        if (slack(cert.separator, vert) > 0) return false;
    }
    return slack(cert.separator, point) > 0;
}

} // namespace lfpoly
