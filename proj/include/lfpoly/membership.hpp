#ifndef LFPOLY_MEMBERSHIP_HPP
#define LFPOLY_MEMBERSHIP_HPP

#include <map>

#include "lfpoly/polytope_rep.hpp"
#include "lfpoly/simplex.hpp"

namespace lfpoly {

/// Exact membership certificate for a point against a V-representation.
/// inside: convex weights over vertex indices reproducing the point.
/// outside: a separating inequality valid on every vertex, violated by
/// the point.
struct LPCertificate {
    enum class Verdict { Inside, Outside };
    Verdict verdict = Verdict::Outside;
    std::map<int, Rational> weights;
    HRow separator;
};

/// Decides conv(v) membership by exact LP. The inside case returns the
/// solver's convex combination; the outside case converts the Farkas dual
/// into a separating hyperplane.
LPCertificate lp_membership(const VectorXq& point, const VRepresentation& v);

/// Recomputes every certificate claim from scratch, independently of the
/// solver path.
bool verify_certificate(const LPCertificate& cert, const VectorXq& point,
                        const VRepresentation& v);

} // namespace lfpoly

#endif
