#include <random>

#include "doctest.h"
#include "lfpoly/membership.hpp"

using namespace lfpoly;

namespace {

VRepresentation square() {
    VRepresentation v;
    v.dimension = 2;
    for (int sx : {-1, 1})
        for (int sy : {-1, 1}) {
            VectorXq p(2);
            p << sx, sy;
            v.vertices.push_back(p);
        }
    v.sort_and_dedupe();
    return v;
}

} // namespace

TEST_SUITE("simplex") {

TEST_CASE("membership inside the square") {
    const auto v = square();
    VectorXq q(2);
    q << Rational(1, 3), Rational(-1, 2);
    const auto cert = lp_membership(q, v);
    CHECK(cert.verdict == LPCertificate::Verdict::Inside);
    CHECK(verify_certificate(cert, q, v));
}

TEST_CASE("membership outside with separating hyperplane") {
    const auto v = square();
    VectorXq q(2);
    q << 2, 0;
    const auto cert = lp_membership(q, v);
    CHECK(cert.verdict == LPCertificate::Verdict::Outside);
    CHECK(verify_certificate(cert, q, v));
    // the separator must actually cut q off from all four vertices
    CHECK(slack(cert.separator, q) > 0);
}

TEST_CASE("vertex of the hull is inside (weight 1 on itself)") {
    const auto v = square();
    const auto cert = lp_membership(v.vertices[0], v);
    CHECK(cert.verdict == LPCertificate::Verdict::Inside);
    CHECK(verify_certificate(cert, v.vertices[0], v));
}

TEST_CASE("dimension mismatch is rejected") {
    const auto v = square();
    CHECK_THROWS_AS(lp_membership(VectorXq::Zero(3), v), DimensionMismatch);
}

TEST_CASE("randomized membership agrees with a direct convex-combination witness") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coord(-3, 3), den(1, 4);
    const auto v = square();
    for (int trial = 0; trial < 100; ++trial) {
        VectorXq q(2);
        q << Rational(coord(rng), den(rng)), Rational(coord(rng), den(rng));
        const bool truly_inside = abs(q(0)) <= 1 && abs(q(1)) <= 1;
        const auto cert = lp_membership(q, v);
        CHECK(verify_certificate(cert, q, v));
        CHECK((cert.verdict == LPCertificate::Verdict::Inside) == truly_inside);
    }
}

TEST_CASE("maximize over polyhedron") {
    // max x + y over the unit square [0,1]^2
    MatrixXq rows(4, 2);
    rows << 1, 0, -1, 0, 0, 1, 0, -1;
    VectorXq bounds(4);
    bounds << 1, 0, 1, 0;
    VectorXq obj(2);
    obj << 1, 1;
    const auto r = maximize_over_polyhedron(obj, rows, bounds);
    REQUIRE(r.status == InequalityLPResult::Status::Optimal);
    CHECK(r.value == 2);
    const VectorXq residual = rows * r.point;
    for (int i = 0; i < 4; ++i) CHECK(residual(i) <= bounds(i));

    // infeasible: x <= -1, -x <= -2  (i.e. x >= 2)
    MatrixXq bad(2, 1);
    bad << 1, -1;
    VectorXq bb(2);
    bb << -1, -2;
    CHECK(maximize_over_polyhedron(VectorXq::Zero(1), bad, bb).status ==
          InequalityLPResult::Status::Infeasible);

    // unbounded: max x subject to -x <= 0
    MatrixXq half(1, 1);
    half << -1;
    VectorXq hb(1);
    hb << 0;
    VectorXq ox(1);
    ox << 1;
    CHECK(maximize_over_polyhedron(ox, half, hb).status ==
          InequalityLPResult::Status::Unbounded);
}

} // TEST_SUITE
